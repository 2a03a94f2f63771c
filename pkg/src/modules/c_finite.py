"""
Modules free of finite rank over a commutative F*C

A split is a unimodular basis of Z^n whose first r rows span C. In the
rebased spec the generators y_1..y_r span F*C, and y_j for j > r acts on
the free basis g_1..g_d through an invertible matrix A_j over F*C:

    y_j (f g_k) = tau_j(f) sum_l A_j[l][k] g_l,   tau_j(y^c) = beta(e_j, c) y^c

so on component vectors y_j m = A_j tau_j(m).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from src.algebra import AlgebraSpec, TorusElement, beta, multiply, ordered_power_defect, rebase, twist
from src.lattice import int_matrix, is_unimodular, unimodular_inverse
from src.modules.matrices import (
    Matrix,
    Vector,
    as_matrix,
    block_diagonal,
    mat_apply,
    mat_identity,
    mat_inverse,
    mat_is_zero,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_twist,
)
from src.models.reports import ConsistencyReport
from src.scalars import Coefficient
from src.utils.errors import ModuleStructureError, NotInvertibleError, NotUnimodularError, SpecMismatchError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
SparseVector = Dict[Hashable, Coefficient]


def _unit_vector(n: int, j: int, power: int = 1) -> Exponent:
    return tuple(power if i == j else 0 for i in range(n))


@dataclass(frozen=True, eq=False)
class CFiniteModule:
    """
    Free F*C-module of rank d with semilinear actions of the other generators

    actions[k] and inverses[k] belong to split generator r + k (0-based).
    Entries live in `local`, the spec rebased along the split.
    """
    spec: AlgebraSpec
    split: Tuple[Exponent, ...]
    r: int
    d: int
    local: AlgebraSpec
    actions: Tuple[Matrix, ...]
    inverses: Tuple[Matrix, ...]

    @classmethod
    def build(
        cls,
        spec: AlgebraSpec,
        split: Sequence[Sequence[int]],
        r: int,
        actions: Sequence[Sequence[Sequence[TorusElement]]],
        inverses: Optional[Sequence[Optional[Sequence[Sequence[TorusElement]]]]] = None,
        d: Optional[int] = None,
        local: Optional[AlgebraSpec] = None,
    ) -> "CFiniteModule":
        """
        Validate module data and fill in missing inverses

        Args:
            spec: Ambient algebra spec
            split: Unimodular basis of Z^n, first r rows spanning C
            r: Rank of C
            actions: One d x d matrix per generator r+1..n, over the rebased spec
            inverses: Optional explicit inverses, aligned with actions
            d: Rank; needed only when there are no actions
            local: Rebased spec, when the caller already has it

        Returns:
            CFiniteModule
        """
        n = spec.rank
        split_rows = tuple(tuple(int(x) for x in row) for row in split)
        if len(split_rows) != n or not is_unimodular(int_matrix(split_rows, n)):
            raise NotUnimodularError(f"split must be a unimodular {n}x{n} matrix")
        if not 0 <= r <= n:
            raise ModuleStructureError(f"r = {r} out of range for rank {n}")
        local = local if local is not None else rebase(spec, split_rows)
        for k in range(r):
            for l in range(k + 1, r):
                if not local.gamma(k, l).is_zero():
                    raise ModuleStructureError(f"split rows {k + 1} and {l + 1} do not commute; C is not commutative")
        if len(actions) != n - r:
            raise ModuleStructureError(f"expected {n - r} action matrices, got {len(actions)}")

        matrices = tuple(as_matrix(a) for a in actions)
        if d is None:
            d = len(matrices[0]) if matrices else 1
        for k, a in enumerate(matrices):
            if len(a) != d:
                raise ModuleStructureError(f"action of generator {r + k + 1} is {len(a)}x{len(a)}, expected {d}x{d}")
            for row in a:
                for x in row:
                    _check_entry(local, r, x)

        given = list(inverses) if inverses is not None else [None] * len(matrices)
        if len(given) != len(matrices):
            raise ModuleStructureError("inverses must align with actions")
        resolved = []
        for k, (a, inv) in enumerate(zip(matrices, given)):
            if inv is None:
                try:
                    resolved.append(mat_inverse(local, a))
                except NotInvertibleError as exc:
                    raise NotInvertibleError(f"action of generator {r + k + 1}: {exc}") from exc
            else:
                inv = as_matrix(inv)
                for row in inv:
                    for x in row:
                        _check_entry(local, r, x)
                resolved.append(inv)
        return cls(spec, split_rows, r, d, local, matrices, tuple(resolved))

    @cached_property
    def split_inverse(self):
        return unimodular_inverse(int_matrix(self.split, self.spec.rank))

    @property
    def rank(self) -> int:
        return self.spec.rank

    def action(self, j: int) -> Matrix:
        """A_j for a 0-based split generator j >= r"""
        return self.actions[j - self.r]

    def c_monomial(self, c: Sequence[int], coeff: Optional[Coefficient] = None) -> TorusElement:
        """y^c in F*C for c in C-coordinates"""
        exponent = tuple(c) + (0,) * (self.rank - self.r)
        return TorusElement.monomial(self.local, exponent, coeff)

    def zero_vector(self) -> Vector:
        return (TorusElement.zero(self.local),) * self.d

    def free_generators(self) -> List[Vector]:
        zero, one = TorusElement.zero(self.local), TorusElement.one(self.local)
        return [tuple(one if k == l else zero for k in range(self.d)) for l in range(self.d)]

    def vector(self, components: Sequence[TorusElement]) -> Vector:
        if len(components) != self.d:
            raise ModuleStructureError(f"module element needs {self.d} components, got {len(components)}")
        for x in components:
            _check_entry(self.local, self.r, x)
        return tuple(components)

    def is_zero_vector(self, m: Vector) -> bool:
        return all(x.is_zero() for x in m)

    def add(self, m1: Vector, m2: Vector) -> Vector:
        return tuple(x + y for x, y in zip(m1, m2))

    def scale(self, m: Vector, kappa: Coefficient) -> Vector:
        return tuple(x.scale(kappa) for x in m)

    def act_generator(self, j: int, m: Vector, power: int = 1) -> Vector:
        """y_j^power on m, j a 0-based split index"""
        if j < self.r:
            shift = self.c_monomial(_unit_vector(self.r, j, power))
            return tuple(multiply(shift, x) for x in m)
        e_j = _unit_vector(self.rank, j)
        if power >= 0:
            a, tau = self.action(j), e_j
        else:
            a, tau = self.inverses[j - self.r], tuple(-x for x in e_j)
        for _ in range(abs(power)):
            if power >= 0:
                m = mat_apply(self.local, a, tuple(twist(self.local, tau, x) for x in m))
            else:
                # y_j^-1 m = tau_j^-1(A_j^-1 m)
                m = tuple(twist(self.local, tau, x) for x in mat_apply(self.local, a, m))
        return m

    def act(self, a: Sequence[int], m: Vector) -> Vector:
        """y^a m for a in split coordinates; y^a = y^(c,0) y_r^a_r ... y_n^a_n"""
        a = self.local.check_vector(a)
        for j in reversed(range(self.r, self.rank)):
            if a[j]:
                m = self.act_generator(j, m, a[j])
        if any(a[: self.r]):
            shift = self.c_monomial(a[: self.r])
            m = tuple(multiply(shift, x) for x in m)
        return m

    def to_split(self, a: Sequence[int]) -> Exponent:
        return tuple(int(x) for x in int_matrix([a], self.rank).dot(self.split_inverse)[0])

    def act_ambient(self, a: Sequence[int], m: Vector) -> Vector:
        """x^a m for a in the ambient coordinates of spec"""
        b = self.to_split(self.spec.check_vector(a))
        defect = ordered_power_defect(self.spec, list(self.split), b)
        out = self.act(b, m)
        if defect.is_zero():
            return out
        return self.scale(out, self.spec.embed(-defect))

    def sparse(self, m: Vector) -> SparseVector:
        """Coordinates over the coefficient ring, keyed by (component, C-exponent)"""
        out: SparseVector = {}
        for l, x in enumerate(m):
            for exp, kappa in x.terms:
                out[(l, exp[: self.r])] = kappa
        return out

    def vector_radius(self, m: Vector) -> int:
        return max((abs(c) for x in m for exp in x.support for c in exp[: self.r]), default=0)

    @cached_property
    def action_radius(self) -> int:
        """Largest C-exponent appearing in any A_j or its inverse"""
        entries = [x for mats in (self.actions, self.inverses) for a in mats for row in a for x in row]
        return max((abs(c) for x in entries for exp in x.support for c in exp[: self.r]), default=0)


def _check_entry(local: AlgebraSpec, r: int, x: TorusElement) -> None:
    if x.spec != local:
        raise SpecMismatchError("module entries must belong to the rebased spec")
    for exp in x.support:
        if any(exp[r:]):
            raise ModuleStructureError(f"entry exponent {exp} is not supported in C")


@dataclass(frozen=True, eq=False)
class ModuleSum:
    """
    Outer direct sum of modules over one algebra, with possibly different splits

    Elements are tuples of component vectors. Only the operations the
    probes need are provided; exponents are ambient.
    """
    spec: AlgebraSpec
    components: Tuple[CFiniteModule, ...]

    @property
    def d(self) -> int:
        return sum(m.d for m in self.components)

    def free_generators(self) -> List[Tuple[Vector, ...]]:
        out = []
        for idx, module in enumerate(self.components):
            for g in module.free_generators():
                out.append(
                    tuple(g if k == idx else other.zero_vector() for k, other in enumerate(self.components))
                )
        return out

    def is_zero_vector(self, m) -> bool:
        return all(module.is_zero_vector(x) for module, x in zip(self.components, m))

    def add(self, m1, m2):
        return tuple(module.add(x, y) for module, x, y in zip(self.components, m1, m2))

    def scale(self, m, kappa: Coefficient):
        return tuple(module.scale(x, kappa) for module, x in zip(self.components, m))

    def act_ambient(self, a: Sequence[int], m):
        return tuple(module.act_ambient(a, x) for module, x in zip(self.components, m))

    def sparse(self, m) -> SparseVector:
        out: SparseVector = {}
        for idx, (module, x) in enumerate(zip(self.components, m)):
            for key, kappa in module.sparse(x).items():
                out[(idx,) + key] = kappa
        return out


def act(module: CFiniteModule, a: Sequence[int], m: Vector) -> Vector:
    return module.act(a, m)


def check_consistency(module: CFiniteModule) -> ConsistencyReport:
    """
    A_i tau_i(A_j) = beta(e_i, e_j) A_j tau_j(A_i) for r <= i < j < n,
    plus A_j A_j^-1 = A_j^-1 A_j = 1
    """
    local, n, r = module.local, module.rank, module.r
    failing = []
    for i in range(r, n):
        for j in range(i + 1, n):
            e_i, e_j = _unit_vector(n, i), _unit_vector(n, j)
            lhs = mat_mul(local, module.action(i), mat_twist(local, e_i, module.action(j)))
            rhs = mat_mul(local, module.action(j), mat_twist(local, e_j, module.action(i)))
            rhs = mat_scale(rhs, local.embed(beta(local, e_i, e_j)))
            if not mat_is_zero(mat_sub(lhs, rhs)):
                failing.append([i + 1, j + 1])

    identity = mat_identity(local, module.d)
    bad_inverses = []
    for k, (a, inv) in enumerate(zip(module.actions, module.inverses)):
        if mat_mul(local, a, inv) != identity or mat_mul(local, inv, a) != identity:
            bad_inverses.append(r + k + 1)

    if failing or bad_inverses:
        logger.debug("consistency failures: pairs %s, inverses %s", failing, bad_inverses)
    return ConsistencyReport(
        passed=not failing and not bad_inverses,
        r=r,
        d=module.d,
        failing_pairs=failing,
        bad_inverses=bad_inverses,
    )


def direct_sum(m1: CFiniteModule, m2: CFiniteModule) -> CFiniteModule:
    """Block-diagonal sum over a shared split"""
    if m1.spec != m2.spec:
        raise SpecMismatchError("summands belong to different algebra specs")
    if m1.split != m2.split or m1.r != m2.r:
        raise ModuleStructureError("summands must share the split and the rank of C")
    local = m1.local
    actions = [block_diagonal(local, a, b) for a, b in zip(m1.actions, m2.actions)]
    inverses = [block_diagonal(local, a, b) for a, b in zip(m1.inverses, m2.inverses)]
    return CFiniteModule(m1.spec, m1.split, m1.r, m1.d + m2.d, local, tuple(actions), tuple(inverses))


def external_sum(modules: Iterable[CFiniteModule]) -> ModuleSum:
    modules = tuple(modules)
    if not modules:
        raise ModuleStructureError("external_sum needs at least one module")
    spec = modules[0].spec
    if any(m.spec != spec for m in modules):
        raise SpecMismatchError("summands belong to different algebra specs")
    return ModuleSum(spec, modules)


def change_of_basis(
    module: CFiniteModule,
    p: Sequence[Sequence[TorusElement]],
    p_inv: Optional[Sequence[Sequence[TorusElement]]] = None,
) -> CFiniteModule:
    """
    Actions in the free basis given by the columns of P

    A'_j = P^-1 A_j tau_j(P) and A'_j^-1 = tau_j(P^-1) A_j^-1 P.
    """
    local = module.local
    p = as_matrix(p)
    if len(p) != module.d:
        raise ModuleStructureError(f"basis change must be {module.d}x{module.d}")
    p_inv = mat_inverse(local, p) if p_inv is None else as_matrix(p_inv)
    if mat_mul(local, p, p_inv) != mat_identity(local, module.d):
        raise NotInvertibleError("P_inv is not the inverse of P")

    actions, inverses = [], []
    for k, (a, inv) in enumerate(zip(module.actions, module.inverses)):
        e_j = _unit_vector(module.rank, module.r + k)
        actions.append(mat_mul(local, mat_mul(local, p_inv, a), mat_twist(local, e_j, p)))
        inverses.append(mat_mul(local, mat_mul(local, mat_twist(local, e_j, p_inv), inv), p))
    return CFiniteModule(module.spec, module.split, module.r, module.d, local, tuple(actions), tuple(inverses))
