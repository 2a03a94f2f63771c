"""
AlgebraSpec: rank, scalar group and the alternating matrix of multiparameters

Indices are 0-based in code and 1-based in files.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Sequence, Tuple

from src.lattice import Sublattice, is_unimodular, int_matrix
from src.scalars import Coefficient, GammaElement, embed_unit
from src.utils.errors import NotUnimodularError, SpecMismatchError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class AlgebraSpec:
    """
    F*A for A = Z^n with u_i u_j = q_ij u_j u_i

    q holds g_ij = log q_ij for i < j only, zero entries dropped, sorted.
    g_ii = 0 and g_ji = -g_ij are implied.
    """
    rank: int
    torsion_order: int
    free_params: int
    q: Tuple[Tuple[Pair, GammaElement], ...]

    @classmethod
    def build(cls, rank: int, torsion_order: int, free_params: int, q: Mapping[Pair, GammaElement]) -> "AlgebraSpec":
        if rank < 1:
            raise SpecMismatchError(f"rank must be at least 1, got {rank}")
        entries: Dict[Pair, GammaElement] = {}
        for (i, j), g in q.items():
            if g.signature != (torsion_order, free_params):
                raise SpecMismatchError(
                    f"q_{i + 1}{j + 1} has (N, m) = {g.signature}, expected {(torsion_order, free_params)}"
                )
            if not (0 <= i < rank and 0 <= j < rank) or i == j:
                raise SpecMismatchError(f"invalid index pair ({i + 1}, {j + 1}) for rank {rank}")
            if i > j:
                i, j, g = j, i, -g
            entries[(i, j)] = entries[(i, j)] + g if (i, j) in entries else g
        kept = tuple(sorted((p, g) for p, g in entries.items() if not g.is_zero()))
        return cls(rank, torsion_order, free_params, kept)

    @classmethod
    def commutative(cls, rank: int, torsion_order: int = 1, free_params: int = 0) -> "AlgebraSpec":
        return cls.build(rank, torsion_order, free_params, {})

    @property
    def signature(self) -> Tuple[int, int]:
        return self.torsion_order, self.free_params

    def zero_gamma(self) -> GammaElement:
        return GammaElement.zero(self.torsion_order, self.free_params)

    def gamma(self, i: int, j: int) -> GammaElement:
        if i == j:
            return self.zero_gamma()
        if i > j:
            return -self.gamma(j, i)
        return self._lookup.get((i, j), self.zero_gamma())

    @cached_property
    def _lookup(self) -> Dict[Pair, GammaElement]:
        return dict(self.q)

    @cached_property
    def tors_matrix(self) -> List[List[int]]:
        n = self.rank
        out = [[0] * n for _ in range(n)]
        for (i, j), g in self.q:
            out[i][j], out[j][i] = g.tors, -g.tors
        return out

    @cached_property
    def free_matrices(self) -> List[List[List[int]]]:
        n = self.rank
        mats = [[[0] * n for _ in range(n)] for _ in range(self.free_params)]
        for (i, j), g in self.q:
            for k, e in enumerate(g.free):
                mats[k][i][j], mats[k][j][i] = e, -e
        return mats

    def one(self) -> Coefficient:
        return Coefficient.constant(self.torsion_order, self.free_params)

    def zero(self) -> Coefficient:
        return Coefficient.zero(self.torsion_order, self.free_params)

    def embed(self, g: GammaElement) -> Coefficient:
        if g.signature != self.signature:
            raise SpecMismatchError(f"scalar {g} does not belong to this spec")
        return embed_unit(g)

    def is_commutative(self) -> bool:
        return not self.q

    def check_vector(self, a: Sequence[int]) -> Tuple[int, ...]:
        if len(a) != self.rank:
            raise SpecMismatchError(f"exponent {tuple(a)} does not have length {self.rank}")
        return tuple(int(x) for x in a)


def _bilinear(spec: AlgebraSpec, a: Sequence[int], b: Sequence[int], lower_only: bool) -> GammaElement:
    a, b = spec.check_vector(a), spec.check_vector(b)
    tors, free = 0, [0] * spec.free_params
    for (i, j), g in spec.q:
        # g_ij at (i, j) and -g_ij at (j, i), i < j
        weight = -a[j] * b[i] if lower_only else a[i] * b[j] - a[j] * b[i]
        if weight:
            tors += weight * g.tors
            for k, e in enumerate(g.free):
                free[k] += weight * e
    return GammaElement(spec.torsion_order, tors, tuple(free))


def beta(spec: AlgebraSpec, a: Sequence[int], b: Sequence[int]) -> GammaElement:
    """Commutator bicharacter: x^a x^b = beta(a, b) x^b x^a"""
    return _bilinear(spec, a, b, lower_only=False)


def cocycle(spec: AlgebraSpec, a: Sequence[int], b: Sequence[int]) -> GammaElement:
    """Normal-ordering cocycle lambda(a, b) = sum over i > j of a_i b_j g_ij"""
    return _bilinear(spec, a, b, lower_only=True)


def commutator_units(spec: AlgebraSpec, a: Sequence[int], b: Sequence[int]) -> GammaElement:
    """Group commutator of the units x^a and x^b, which is beta(a, b)"""
    return beta(spec, a, b)


def rebase(spec: AlgebraSpec, u) -> AlgebraSpec:
    """
    Same algebra in the basis given by the rows of a unimodular U

    Args:
        spec: Algebra spec
        u: n x n unimodular integer matrix

    Returns:
        Spec with g'_kl = beta(U_k, U_l)
    """
    u = int_matrix(u, spec.rank)
    if u.shape[0] != spec.rank or not is_unimodular(u):
        raise NotUnimodularError(f"basis change must be a unimodular {spec.rank}x{spec.rank} matrix")
    rows = [tuple(int(x) for x in row) for row in u]
    n = spec.rank
    q = {(k, l): beta(spec, rows[k], rows[l]) for k in range(n) for l in range(k + 1, n)}
    return AlgebraSpec.build(n, spec.torsion_order, spec.free_params, q)


def power_cocycle_spec(spec: AlgebraSpec, r: int, s: int) -> AlgebraSpec:
    """g_ij scaled by s when both indices lie past the first r"""
    if not 0 <= r <= spec.rank:
        raise SpecMismatchError(f"split rank {r} out of range for rank {spec.rank}")
    if s < 1:
        raise SpecMismatchError(f"power must be positive, got {s}")
    q = {(i, j): (s * g if i >= r else g) for (i, j), g in spec.q}
    return AlgebraSpec.build(spec.rank, spec.torsion_order, spec.free_params, q)


def sub_spec(spec: AlgebraSpec, lattice: Sublattice) -> AlgebraSpec:
    """Spec of F*B in the HNF basis of B"""
    if lattice.ambient_rank != spec.rank:
        raise SpecMismatchError(f"sublattice lives in Z^{lattice.ambient_rank}, spec has rank {spec.rank}")
    if lattice.rank == 0:
        raise SpecMismatchError("the zero sublattice has no algebra spec (rank must be at least 1)")
    rows = lattice.rows
    q = {
        (k, l): beta(spec, rows[k], rows[l])
        for k in range(len(rows))
        for l in range(k + 1, len(rows))
    }
    return AlgebraSpec.build(len(rows), spec.torsion_order, spec.free_params, q)
