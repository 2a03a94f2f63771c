"""
Induced modules F*A (x)_{F*E} chi and the clock-and-shift block module
"""
import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

from src.algebra import AlgebraSpec, TorusElement, multiply, ordered_power_defect, rebase
from src.commutative import verify_virtual_complement
from src.lattice import Sublattice, complete_basis, hermite_normal_form, int_matrix, unimodular_inverse
from src.lattice.sublattice import is_saturated
from src.modules.c_finite import CFiniteModule
from src.scalars import Coefficient, GammaElement
from src.utils.errors import LatticeError, ModuleStructureError, ScalarError, SpecMismatchError

logger = logging.getLogger(__name__)


def _row_times(v: Sequence[int], m) -> Tuple[int, ...]:
    return tuple(int(x) for x in int_matrix([v], m.shape[0]).dot(m)[0])


def _single_exponent(element: TorusElement) -> Tuple[Tuple[int, ...], Coefficient]:
    (exp, kappa), = element.terms
    return exp, kappa


class _Character:
    """chi on the monomials of F*E, from its values on the basis of E"""

    def __init__(self, spec: AlgebraSpec, local: AlgebraSpec, split_rows, e_local, values):
        self.local = local
        self.e_local = e_local
        # values are given on the ambient monomials x^{E_k}
        self.values = [
            chi * spec.embed(ordered_power_defect(spec, split_rows, f))
            for chi, f in zip(values, e_local)
        ]

    def __call__(self, y: Sequence[int]) -> Coefficient:
        """chi(y^eps) for eps = sum_k y_k f_k"""
        out = self.local.one()
        for chi, yk in zip(self.values, y):
            if yk > 0:
                for _ in range(yk):
                    out = out * chi
            elif yk < 0:
                inv = chi.inverse_unit()
                for _ in range(-yk):
                    out = out * inv
        defect = ordered_power_defect(self.local, self.e_local, y)
        return out * self.local.embed(-defect)


def induce_cyclic(
    spec: AlgebraSpec,
    c_lattice: Sublattice,
    e_lattice: Sublattice,
    character: Optional[Sequence[Coefficient]] = None,
) -> CFiniteModule:
    """
    Module induced from a character of the commutative F*E

    With index k = [Z^n : C + E], the module is free of rank k over F*C with
    basis x^rho (x) 1 for rho running over coset representatives of the
    projection of E. Each A_j is a monomial matrix.

    Args:
        spec: Algebra spec
        c_lattice: Commutative C
        e_lattice: Virtual complement of C
        character: Unit values on the HNF basis of E; trivial when omitted

    Returns:
        CFiniteModule of rank k

    Raises:
        ModuleStructureError: when E is not a virtual complement of C
    """
    n = spec.rank
    report = verify_virtual_complement(spec, c_lattice, e_lattice)
    if not report.passed:
        raise ModuleStructureError(f"E is not a virtual complement of C: {report.model_dump()}")
    r = c_lattice.rank

    values = list(character) if character is not None else [spec.one()] * e_lattice.rank
    if len(values) != e_lattice.rank:
        raise ModuleStructureError(f"character needs {e_lattice.rank} values, got {len(values)}")
    for chi in values:
        if chi.signature != spec.signature:
            raise SpecMismatchError("character values do not match the spec's coefficient ring")
        if not chi.is_unit():
            raise ScalarError("character values must be units")

    if report.index == 1:
        split = int_matrix(list(c_lattice.rows) + list(e_lattice.rows), n)
    else:
        if not is_saturated(c_lattice):
            raise LatticeError("C must have torsion-free quotient when C + E has index > 1")
        split = complete_basis(c_lattice)
    split_rows = [tuple(int(x) for x in row) for row in split]
    local = rebase(spec, split)
    split_inv = unimodular_inverse(split)
    e_local = [_row_times(row, split_inv) for row in e_lattice.rows]
    chi = _Character(spec, local, split_rows, e_local, values)

    width = n - r
    if width:
        h, u = hermite_normal_form(int_matrix([row[r:] for row in e_local], width))
        diag = [int(h[i, i]) for i in range(width)]
        lifts = [_row_times(row, int_matrix(e_local, n)) for row in u.tolist()]
        u_rows = [tuple(int(x) for x in row) for row in u]
    else:
        h, diag, lifts, u_rows = None, [], [], []

    reps = [tuple(rho) for rho in product(*(range(k) for k in diag))]
    index_of = {rho: idx for idx, rho in enumerate(reps)}
    d = len(reps)
    logger.debug("inducing a rank-%d module over C of rank %d", d, r)

    def reduce(v: List[int]):
        coeffs = [0] * width
        for i in range(width):
            q = v[i] // diag[i]
            if q:
                v = [a - q * int(b) for a, b in zip(v, h[i])]
            coeffs[i] = q
        return tuple(v), coeffs

    def mono(exponent) -> TorusElement:
        return TorusElement.monomial(local, exponent)

    zero = TorusElement.zero(local)
    actions = []
    for j in range(r, n):
        columns = [[zero] * d for _ in range(d)]
        for rho in reps:
            shifted = list(rho)
            shifted[j - r] += 1
            rho_new, coeffs = reduce(shifted)
            eps = tuple(sum(c * lift[i] for c, lift in zip(coeffs, lifts)) for i in range(n))
            y = tuple(sum(c * row[k] for c, row in zip(coeffs, u_rows)) for k in range(width))
            c_eps = tuple(eps[:r]) + (0,) * width
            neg_c = tuple(-x for x in c_eps)

            exp1, u1 = _single_exponent(multiply(TorusElement.generator(local, j), mono((0,) * r + rho)))
            target = multiply(multiply(mono(neg_c), mono((0,) * r + rho_new)), mono(eps))
            exp2, u2 = _single_exponent(target)
            if exp1 != exp2:
                raise ModuleStructureError(f"coset bookkeeping failed: {exp1} != {exp2}")
            kappa = u1 * u2.inverse_unit() * chi(y)
            columns[index_of[rho_new]][index_of[rho]] = TorusElement.monomial(local, neg_c, kappa)
        actions.append(columns)

    return CFiniteModule.build(spec, split_rows, r, actions, d=d, local=local)


def clock_shift_module(spec: AlgebraSpec) -> CFiniteModule:
    """
    N-dimensional module over F*Z^2 with q = zeta^t: A_1 = diag(zeta^(tk)), A_2 = shift

    A_1 A_2 = zeta^t A_2 A_1, which is the defining relation with C = 0.
    """
    if spec.rank != 2:
        raise SpecMismatchError("the clock-and-shift module needs a rank-2 spec")
    g = spec.gamma(0, 1)
    if any(g.free):
        raise SpecMismatchError("the clock-and-shift module needs q_12 to be a root of unity")
    order = spec.torsion_order
    zero = TorusElement.zero(spec)
    clock = [[zero] * order for _ in range(order)]
    shift = [[zero] * order for _ in range(order)]
    for k in range(order):
        value = spec.embed(GammaElement(order, g.tors * k, g.free))
        clock[k][k] = TorusElement.monomial(spec, (0, 0), value)
        shift[(k + 1) % order][k] = TorusElement.one(spec)
    return CFiniteModule.build(spec, [(1, 0), (0, 1)], 0, [clock, shift], d=order)
