"""
Commuting monomials mu_j x_j^s and the virtual complement E they span

For C commutative with torsion-free quotient, extend C's basis to a basis
of Z^n and look for c_j in C-coordinates and s >= 1 with

    beta(c_i + s e_i, c_j + s e_j) = 0   for all r <= i < j < n.

Since beta vanishes on C this equals s times

    sum_k c_ik g'_kj - sum_k c_jk g'_ki + s g'_ij,

which is a linear system over Z in the free parameters (after dividing by
s) and a congruence modulo N, kept undivided, in the torsion part.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from src.algebra import AlgebraSpec, is_commutative_sublattice, rebase, sub_spec
from src.lattice import (
    Sublattice,
    complete_basis,
    coordinates,
    finite_index_adjust,
    int_matrix,
    kernel_integer,
    kernel_mixed,
    lattice_index,
    lattice_intersection,
    lattice_sum,
)
from src.lattice.sublattice import is_saturated
from src.models.reports import ComplementSolution, VirtualComplementReport
from src.utils import config
from src.utils.errors import ComplementNotFoundError, LatticeError, QTorusError

logger = logging.getLogger(__name__)


def _pair_rows(local: AlgebraSpec, r: int) -> Tuple[List[Tuple[int, int]], int]:
    n = local.rank
    pairs = [(i, j) for i in range(r, n) for j in range(i + 1, n)]
    return pairs, (n - r) * r


def _c_index(r: int, j: int, k: int) -> int:
    """Column of c_{j,k} among the c unknowns"""
    return (j - r) * r + k


def _equation(local: AlgebraSpec, r: int, i: int, j: int, component) -> Tuple[List[int], int]:
    """
    Coefficients of the c unknowns and of s in one scalar component of the
    (i, j) equation
    """
    width = (local.rank - r) * r
    row = [0] * width
    for k in range(r):
        row[_c_index(r, i, k)] += component(local.gamma(k, j))
        row[_c_index(r, j, k)] -= component(local.gamma(k, i))
    return row, component(local.gamma(i, j))


def _norm(v: Sequence[int], skip: int) -> int:
    return max((abs(x) for x in v[skip:]), default=0)


def _greedy(base: List[int], moves: Sequence[Sequence[int]], skip: int) -> List[int]:
    current = list(base)
    improved = True
    while improved:
        improved = False
        for move in moves:
            for sign in (1, -1):
                candidate = [a + sign * b for a, b in zip(current, move)]
                if _norm(candidate, skip) < _norm(current, skip):
                    current, improved = candidate, True
    return current


def _improve(base: List[int], moves: Sequence[Sequence[int]], skip: int) -> List[int]:
    """
    Smallest max-norm point of base + span(moves) in the c part; ties go to
    the lexicographically largest c

    The moves are HNF rows with zeros before skip. Once the coefficients of
    the earlier rows are fixed, every column before the next pivot is final,
    so each coefficient ranges over a finite interval below the greedy norm.
    """
    greedy = _greedy(base, moves, skip)
    pivots = [next(k for k, x in enumerate(move) if x != 0) for move in moves]
    if any(p < skip for p in pivots) or any(a >= b for a, b in zip(pivots, pivots[1:])):
        return greedy

    bound = _norm(greedy, skip)
    edges = pivots + [len(base)]

    def key(v):
        return _norm(v, skip), [-x for x in v[skip:]]

    def settled(v, lo, hi):
        return all(abs(x) <= bound for x in v[max(lo, skip):hi])

    best = [greedy]

    def search(idx: int, current: List[int]) -> None:
        if idx == len(moves):
            if key(current) < key(best[0]):
                best[0] = current
            return
        move, p = moves[idx], pivots[idx]
        a, c = move[p], current[p]
        if a > 0:
            lo, hi = -((bound + c) // a), (bound - c) // a
        else:
            lo, hi = -((c - bound) // a), (-bound - c) // a
        for k in range(lo, hi + 1):
            nxt = [x + k * y for x, y in zip(current, move)]
            if settled(nxt, p, edges[idx + 1]):
                search(idx + 1, nxt)

    if settled(base, skip, edges[0]):
        search(0, list(base))
    return best[0]


def _solve_generic(local: AlgebraSpec, r: int, s_max: int) -> Optional[Tuple[int, List[int]]]:
    """N = 1: one homogeneous system in (s, c); minimal s from the HNF"""
    pairs, width = _pair_rows(local, r)
    rows = []
    for i, j in pairs:
        for p in range(local.free_params):
            coeffs, s_coeff = _equation(local, r, i, j, lambda g, p=p: g.free[p])
            rows.append([s_coeff] + coeffs)
    kernel = kernel_integer(int_matrix(rows, width + 1), width + 1)
    if not kernel.rows or kernel.rows[0][0] == 0:
        return None
    first = list(kernel.rows[0])
    if first[0] > s_max:
        return None
    solution = _improve(first, [row for row in kernel.rows[1:]], skip=1)
    return solution[0], solution[1:]


def _solve_torsion(local: AlgebraSpec, r: int, s_max: int) -> Optional[Tuple[int, List[int]]]:
    """N > 1: for each s, solve the mixed system in (w, c) and look for w = 1"""
    pairs, width = _pair_rows(local, r)
    modulus = local.torsion_order
    for s in range(1, s_max + 1):
        free_rows, tors_rows = [], []
        for i, j in pairs:
            for p in range(local.free_params):
                coeffs, s_coeff = _equation(local, r, i, j, lambda g, p=p: g.free[p])
                free_rows.append([s * s_coeff] + coeffs)
            coeffs, s_coeff = _equation(local, r, i, j, lambda g: g.tors)
            tors_rows.append([s * s * s_coeff] + [s * x for x in coeffs])
        solutions = kernel_mixed(free_rows, tors_rows, modulus, width + 1)
        logger.debug("complement search: s=%d, solution lattice rank %d", s, solutions.rank)
        if solutions.rows and solutions.rows[0][0] == 1:
            best = _improve(list(solutions.rows[0]), solutions.rows[1:], skip=1)
            return s, best[1:]
    return None


def complement_solver(spec: AlgebraSpec, lattice: Sublattice, s_max: Optional[int] = None) -> ComplementSolution:
    """
    Monomials mu_j = x^{c_j} in F*C and s > 0 with the mu_j x_j^s commuting

    Args:
        spec: Algebra spec
        lattice: Commutative C with Z^n / C torsion-free
        s_max: Largest s tried

    Returns:
        ComplementSolution with E generated by c_j + s e_j

    Raises:
        ComplementNotFoundError: when no s <= s_max works
    """
    s_max = s_max or config.S_MAX
    n = spec.rank
    if lattice.ambient_rank != n:
        raise LatticeError(f"sublattice lives in Z^{lattice.ambient_rank}, spec has rank {n}")
    if not is_commutative_sublattice(spec, lattice):
        raise QTorusError("C must be commutative")
    if not is_saturated(lattice):
        raise LatticeError("Z^n / C has torsion; pass through finite_index_adjust first")

    r = lattice.rank
    split = complete_basis(lattice)
    local = rebase(spec, split)

    if local.torsion_order == 1:
        found = _solve_generic(local, r, s_max)
    else:
        found = _solve_torsion(local, r, s_max)
    if found is None:
        raise ComplementNotFoundError(s_max)
    s, flat = found

    mu = [[flat[_c_index(r, j, k)] for k in range(r)] for j in range(r, n)]
    split_rows = [tuple(int(x) for x in row) for row in split]
    generators = []
    for idx, j in enumerate(range(r, n)):
        vec = [s * x for x in split_rows[j]]
        for k in range(r):
            vec = [a + mu[idx][k] * b for a, b in zip(vec, split_rows[k])]
        generators.append(vec)

    e_lattice = Sublattice.from_generators(generators, n)
    if not is_commutative_sublattice(spec, e_lattice):
        raise QTorusError(f"complement {generators} failed its commutativity re-check")
    logger.info("complement found with s=%d", s)
    return ComplementSolution(
        s=s,
        mu=mu,
        E_basis=generators,
        C_basis=[list(row) for row in lattice.rows],
        split=[list(row) for row in split_rows],
    )


def virtual_complement(spec: AlgebraSpec, lattice: Sublattice, s_max: Optional[int] = None) -> ComplementSolution:
    """
    Complement for any commutative C

    When Z^n / C has torsion, solve inside A' = finite_index_adjust(C), in
    which C has torsion-free quotient, and map E back to Z^n.
    """
    n = spec.rank
    if is_saturated(lattice):
        return complement_solver(spec, lattice, s_max)

    adjusted = finite_index_adjust(lattice, n)
    inner = sub_spec(spec, adjusted)
    local_c = Sublattice.from_generators([coordinates(adjusted, row) for row in lattice.rows], adjusted.rank)
    solution = complement_solver(inner, local_c, s_max)

    def to_ambient(v: Sequence[int]) -> List[int]:
        return [sum(v[k] * adjusted.rows[k][i] for k in range(adjusted.rank)) for i in range(n)]

    return ComplementSolution(
        s=solution.s,
        mu=solution.mu,
        E_basis=[to_ambient(v) for v in solution.E_basis],
        C_basis=[to_ambient(v) for v in solution.C_basis],
        split=[to_ambient(v) for v in solution.split],
    )


def solution_lattice(solution: ComplementSolution, n: int) -> Sublattice:
    return Sublattice.from_generators(solution.E_basis, n)


def verify_virtual_complement(spec: AlgebraSpec, c_lattice: Sublattice, e_lattice: Sublattice) -> VirtualComplementReport:
    n = spec.rank
    rank_sum_ok = c_lattice.rank + e_lattice.rank == n
    index = lattice_index(lattice_sum(c_lattice, e_lattice), Sublattice.full(n))
    commutative = is_commutative_sublattice(spec, e_lattice)
    meet = lattice_intersection(c_lattice, e_lattice)
    return VirtualComplementReport(
        passed=rank_sum_ok and index is not None and commutative,
        rank_sum_ok=rank_sum_ok,
        index=index,
        finite_index=index is not None,
        commutative=commutative,
        intersection=[list(row) for row in meet.rows],
    )
