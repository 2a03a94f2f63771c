"""
Maximal rank of a commutative sublattice

Exact when every nonzero form is a rational multiple of a single free form
(symplectic reduction over Q); otherwise a bounded depth-first search.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from src.algebra import AlgebraSpec, beta, is_commutative_sublattice
from src.lattice import Sublattice, saturation
from src.lattice.sublattice import primitive_vectors
from src.models.reports import MaxCommutativeReport
from src.utils import config

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


def _pairing(form: Sequence[Sequence[Fraction]], u: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
    n = len(u)
    return sum((u[i] * form[i][j] * w[j] for i in range(n) for j in range(n) if form[i][j]), Fraction(0))


def rational_rank(form: Matrix) -> int:
    """Rank over Q of an integer matrix"""
    a = [[Fraction(x) for x in row] for row in form]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def maximal_isotropic(form: Matrix) -> List[Tuple[int, ...]]:
    """
    Integer basis of a maximal isotropic subspace of an alternating form

    Symplectic Gram-Schmidt over Q: one vector from each hyperbolic pair
    plus the radical, giving n - rank/2 vectors, then cleared of
    denominators.
    """
    n = len(form)
    f = [[Fraction(x) for x in row] for row in form]
    pool = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    isotropic = []
    while pool:
        u = pool.pop(0)
        partner = next((k for k, w in enumerate(pool) if _pairing(f, u, w)), None)
        isotropic.append(u)
        if partner is None:
            continue
        w = pool.pop(partner)
        c = _pairing(f, u, w)
        projected = []
        for x in pool:
            alpha = -_pairing(f, x, w) / c
            gamma = _pairing(f, x, u) / c
            projected.append([xi + alpha * ui + gamma * wi for xi, ui, wi in zip(x, u, w)])
        pool = projected

    out = []
    for v in isotropic:
        denom = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
        ints = [int(x * denom) for x in v]
        g = reduce(gcd, (abs(x) for x in ints), 0) or 1
        out.append(tuple(x // g for x in ints))
    return out


def _single_form(spec: AlgebraSpec) -> Optional[Matrix]:
    """The common form when all nonzero forms are rational multiples of one free form"""
    if any(g.tors for _, g in spec.q) and spec.torsion_order > 1:
        return None
    nonzero = [mat for mat in spec.free_matrices if any(any(row) for row in mat)]
    if not nonzero:
        return [[0] * spec.rank for _ in range(spec.rank)]
    base = nonzero[0]
    flat_base = [x for row in base for x in row]
    k = next(i for i, x in enumerate(flat_base) if x)
    for mat in nonzero[1:]:
        flat = [x for row in mat for x in row]
        ratio = Fraction(flat[k], flat_base[k])
        if any(Fraction(x) != ratio * y for x, y in zip(flat, flat_base)):
            return None
    return base


def _upper_bound(spec: AlgebraSpec) -> int:
    ranks = [rational_rank(mat) for mat in spec.free_matrices]
    return spec.rank - max(ranks, default=0) // 2


def _search(spec: AlgebraSpec, bound: int, ceiling: int, node_limit: int) -> Tuple[List[Tuple[int, ...]], int]:
    candidates = primitive_vectors(spec.rank, bound)
    best: List[Tuple[int, ...]] = []
    nodes = 0

    def extend(chosen: List[Tuple[int, ...]], start: int) -> bool:
        nonlocal best, nodes
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= ceiling:
                return True
        for idx in range(start, len(candidates)):
            nodes += 1
            if nodes > node_limit:
                return True
            if len(chosen) + len(candidates) - idx <= len(best):
                return False
            v = candidates[idx]
            if any(not beta(spec, v, w).is_zero() for w in chosen):
                continue
            if Sublattice.from_generators(chosen + [v], spec.rank).rank <= len(chosen):
                continue
            if extend(chosen + [v], idx + 1):
                return True
        return False

    extend([], 0)
    if nodes > node_limit:
        logger.warning("commutative rank search stopped after %d nodes; result is a lower bound", node_limit)
    return best, nodes


def max_commutative_rank(
    spec: AlgebraSpec, search_bound: Optional[int] = None, node_limit: Optional[int] = None
) -> MaxCommutativeReport:
    """
    Largest rank of a sublattice B with F*B commutative

    Args:
        spec: Algebra spec
        search_bound: Entry bound for the heuristic search
        node_limit: Node budget for the heuristic search

    Returns:
        MaxCommutativeReport with a saturated witness
    """
    search_bound = search_bound or config.SEARCH_BOUND
    node_limit = node_limit or config.SEARCH_NODE_LIMIT
    n = spec.rank
    ceiling = _upper_bound(spec)

    form = _single_form(spec)
    if form is not None:
        vectors = maximal_isotropic(form)
        witness = saturation(Sublattice.from_generators(vectors, n))
        logger.debug("exact commutative rank %d via symplectic reduction", witness.rank)
        return MaxCommutativeReport(
            rank=witness.rank,
            witness=[list(row) for row in witness.rows],
            exact=True,
            upper_bound=ceiling,
        )

    found, nodes = _search(spec, search_bound, ceiling, node_limit)
    witness = Sublattice.from_generators(found, n)
    saturated = saturation(witness)
    # saturating can break commutativity modulo N
    if is_commutative_sublattice(spec, saturated):
        witness = saturated
    logger.debug("heuristic commutative rank %d after %d nodes", witness.rank, nodes)
    return MaxCommutativeReport(
        rank=witness.rank,
        witness=[list(row) for row in witness.rows],
        exact=False,
        upper_bound=ceiling,
        nodes_visited=nodes,
    )


def witness_lattice(report: MaxCommutativeReport, n: int) -> Sublattice:
    return Sublattice.from_generators(report.witness, n)
