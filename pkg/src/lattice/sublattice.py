"""
Sublattices of Z^n held in row Hermite normal form
"""
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.lattice.normal_forms import (
    IntMatrix,
    hermite_normal_form,
    identity,
    int_matrix,
    is_unimodular,
    smith_normal_form,
    to_rows,
    unimodular_inverse,
)
from src.utils.errors import LatticeError

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class Sublattice:
    """
    A subgroup of Z^n

    rows is the unique HNF basis, so two sublattices are equal exactly when
    their dataclass fields are. Build instances with from_generators.
    """
    ambient_rank: int
    rows: Tuple[Vector, ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ambient_rank:
                raise LatticeError(f"basis row {row} does not live in Z^{self.ambient_rank}")

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]], ambient_rank: int) -> "Sublattice":
        h, _ = hermite_normal_form(int_matrix(generators, ambient_rank))
        rows = tuple(row for row in to_rows(h) if any(row))
        return cls(ambient_rank=ambient_rank, rows=rows)

    @classmethod
    def zero(cls, n: int) -> "Sublattice":
        return cls(ambient_rank=n, rows=())

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(ambient_rank=n, rows=to_rows(identity(n)))

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> IntMatrix:
        return int_matrix(self.rows, self.ambient_rank)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.rows)

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains(self, v)


def _check_ambient(l1: Sublattice, l2: Sublattice) -> None:
    if l1.ambient_rank != l2.ambient_rank:
        raise LatticeError(
            f"ambient ranks differ: {l1.ambient_rank} vs {l2.ambient_rank}"
        )


def kernel_integer(m: IntMatrix, ambient_rank: Optional[int] = None) -> Sublattice:
    """
    Integer right kernel {a : M a = 0}

    Args:
        m: Integer matrix p x n
        ambient_rank: n, needed when M has no rows

    Returns:
        Kernel as a Sublattice of Z^n
    """
    m = int_matrix(m, ambient_rank)
    n = m.shape[1]
    if m.shape[0] == 0:
        return Sublattice.full(n)
    h, u = hermite_normal_form(m.T)
    gens = [u[k] for k in range(n) if not any(h[k])]
    return Sublattice.from_generators(gens, n)


def kernel_mixed(g_free, g_tors, modulus: int, n: int) -> Sublattice:
    """
    Solutions of G_free a = 0 and G_tors a = 0 (mod N)

    Solved as one integer kernel of [[G_free, 0], [G_tors, N I]] projected to
    the first n coordinates. Each basis row is checked against the defining
    equations before returning.
    """
    if modulus < 1:
        raise LatticeError(f"modulus must be positive, got {modulus}")
    g_free = int_matrix(g_free, n)
    g_tors = int_matrix(g_tors, n)
    p, t = g_free.shape[0], g_tors.shape[0]

    stacked = np.zeros((p + t, n + t), dtype=object)
    stacked[:p, :n] = g_free
    stacked[p:, :n] = g_tors
    for k in range(t):
        stacked[p + k, n + k] = modulus

    kernel = kernel_integer(stacked, n + t)
    result = Sublattice.from_generators([row[:n] for row in kernel.rows], n)

    for row in result.rows:
        a = int_matrix([row], n).T
        if p and any(g_free.dot(a).flatten()):
            raise LatticeError(f"kernel row {row} violates the free equations")
        if t and any(x % modulus for x in g_tors.dot(a).flatten()):
            raise LatticeError(f"kernel row {row} violates the congruences mod {modulus}")
    return result


def saturation(lattice: Sublattice) -> Sublattice:
    """Smallest sublattice of the same rank with torsion-free quotient"""
    n = lattice.ambient_rank
    orthogonal = kernel_integer(lattice.basis, n)
    return kernel_integer(orthogonal.basis, n)


def is_saturated(lattice: Sublattice) -> bool:
    return saturation(lattice) == lattice


def complete_basis(lattice: Sublattice) -> IntMatrix:
    """
    Extend the HNF basis of a saturated sublattice to a basis of Z^n

    Returns:
        Unimodular n x n matrix whose first rank rows are the lattice basis
    """
    if not is_saturated(lattice):
        raise LatticeError("only saturated sublattices have a basis completion")
    n, r = lattice.ambient_rank, lattice.rank
    pivots = lattice.pivots
    if all(lattice.rows[k][p] == 1 for k, p in enumerate(pivots)):
        extra = [tuple(int(i == j) for i in range(n)) for j in range(n) if j not in pivots]
    else:
        v_inv = unimodular_inverse(smith_normal_form(lattice.basis).V)
        extra = [tuple(v_inv[k]) for k in range(r, n)]
    completed = int_matrix(list(lattice.rows) + extra, n)
    if not is_unimodular(completed):
        raise LatticeError(f"basis completion of {lattice.rows} is not unimodular")
    return completed


def coordinates(lattice: Sublattice, v: Sequence[int]) -> Vector:
    """Coordinates of v in the HNF basis; rejects non-members"""
    if len(v) != lattice.ambient_rank:
        raise LatticeError(f"vector {tuple(v)} does not live in Z^{lattice.ambient_rank}")
    residual = [int(x) for x in v]
    coords = []
    for row, p in zip(lattice.rows, lattice.pivots):
        q, rem = divmod(residual[p], row[p])
        if rem:
            raise LatticeError(f"{tuple(v)} is not in the lattice")
        coords.append(q)
        residual = [a - q * b for a, b in zip(residual, row)]
    if any(residual):
        raise LatticeError(f"{tuple(v)} is not in the lattice")
    return tuple(coords)


def contains(lattice: Sublattice, v: Sequence[int]) -> bool:
    try:
        coordinates(lattice, v)
    except LatticeError:
        return False
    return True


def lattice_sum(l1: Sublattice, l2: Sublattice) -> Sublattice:
    _check_ambient(l1, l2)
    return Sublattice.from_generators(list(l1.rows) + list(l2.rows), l1.ambient_rank)


def lattice_intersection(l1: Sublattice, l2: Sublattice) -> Sublattice:
    """Intersection via the left kernel of the stacked bases [B1; -B2]"""
    _check_ambient(l1, l2)
    n = l1.ambient_rank
    if l1.rank == 0 or l2.rank == 0:
        return Sublattice.zero(n)
    stacked = int_matrix(list(l1.rows) + [[-x for x in row] for row in l2.rows], n)
    relations = kernel_integer(stacked.T, l1.rank + l2.rank)
    b1 = l1.basis
    gens = [int_matrix([z[: l1.rank]], l1.rank).dot(b1)[0] for z in relations.rows]
    return Sublattice.from_generators(gens, n)


def lattice_index(inner: Sublattice, outer: Sublattice) -> Optional[int]:
    """
    Index [outer : inner]

    Returns:
        The index, or None when it is infinite (ranks differ)
    """
    _check_ambient(inner, outer)
    for row in inner.rows:
        if not contains(outer, row):
            raise LatticeError(f"{row} lies outside the outer lattice")
    if inner.rank != outer.rank:
        return None
    if inner.rank == 0:
        return 1
    coords = int_matrix([coordinates(outer, row) for row in inner.rows], outer.rank)
    return reduce(lambda x, y: x * y, smith_normal_form(coords).invariant_factors, 1)


def quotient_is_torsion_free(outer: Sublattice, inner: Sublattice) -> bool:
    """True when inner <= outer and outer/inner has no torsion"""
    _check_ambient(inner, outer)
    if not all(contains(outer, row) for row in inner.rows):
        return False
    if inner.rank == 0:
        return True
    coords = int_matrix([coordinates(outer, row) for row in inner.rows], outer.rank)
    return all(d == 1 for d in smith_normal_form(coords).invariant_factors)


def finite_index_adjust(lattice: Sublattice, n: int) -> Sublattice:
    """
    Finite-index overlattice A' >= C with A'/C torsion-free

    A' = C + D where D is the complement of saturation(C) from its basis
    completion, so [Z^n : A'] = [sat(C) : C] is finite.
    """
    if lattice.ambient_rank != n:
        raise LatticeError(f"sublattice lives in Z^{lattice.ambient_rank}, not Z^{n}")
    saturated = saturation(lattice)
    completion = complete_basis(saturated)
    extra = [tuple(completion[k]) for k in range(saturated.rank, n)]
    return Sublattice.from_generators(list(lattice.rows) + extra, n)


def primitive_vectors(n: int, bound: int) -> List[Vector]:
    """
    Nonzero vectors in [-bound, bound]^n with gcd 1 and positive leading entry
    """
    out = []
    for v in product(range(-bound, bound + 1), repeat=n):
        nonzero = [x for x in v if x]
        if not nonzero or nonzero[0] < 0:
            continue
        if reduce(gcd, (abs(x) for x in nonzero)) == 1:
            out.append(tuple(v))
    out.sort(key=lambda v: (max(abs(x) for x in v), sum(abs(x) for x in v), v))
    return out
