"""
Fraction-free linear algebra over the coefficient ring

Ranks are ranks over the fraction field of Q(zeta_N)[t^{+-1}], computed
without ever forming a rational function.
"""
from typing import Dict, Hashable, List, Optional, Sequence

from src.scalars.coefficient import Coefficient
from src.scalars.cyclotomic import CyclotomicNumber
from src.utils.errors import ScalarError


SparseVector = Dict[Hashable, Coefficient]


def fraction_free_rank(matrix: Sequence[Sequence[Coefficient]]) -> int:
    """
    Rank by Bareiss elimination with full pivoting

    Each step divides exactly by the previous pivot, so every entry stays a
    minor of the input and no fractions appear. Unit pivots are preferred.

    Args:
        matrix: Rectangular list of rows of Coefficients

    Returns:
        Rank over the fraction field
    """
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    if any(len(row) != cols for row in a):
        raise ScalarError("fraction_free_rank needs a rectangular matrix")
    sample = a[0][0]
    prev = Coefficient.constant(sample.order, sample.free_params)

    rank = 0
    for k in range(min(rows, cols)):
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j].is_zero():
                    continue
                if pivot is None or (a[i][j].is_unit() and not a[pivot[0]][pivot[1]].is_unit()):
                    pivot = (i, j)
            if pivot is not None and a[pivot[0]][pivot[1]].is_unit():
                break
        if pivot is None:
            break
        pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]

        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = Coefficient.zero(sample.order, sample.free_params)
        prev = a[k][k]
        rank += 1
    return rank


def field_rank(matrix: Sequence[Sequence[CyclotomicNumber]]) -> int:
    """Gaussian elimination over Q(zeta_N); cross-check for fraction_free_rank"""
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if not a[i][c].is_zero()), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = a[rank][c].inverse()
        for i in range(rows):
            if i != rank and not a[i][c].is_zero():
                factor = a[i][c] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


class EchelonBasis:
    """
    Incremental sparse echelon form over the coefficient ring

    Vectors are dicts from sortable keys to Coefficients. The pivot of a
    stored row is its smallest key; rows with a unit pivot are normalised to
    pivot 1, others are combined by cross-multiplication. Keys appended as
    tags (sorting after every data key) record which inputs were combined,
    which is how dependency witnesses are read off.
    """

    def __init__(self):
        self._rows: Dict[Hashable, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: SparseVector) -> SparseVector:
        v = {k: c for k, c in vector.items() if not c.is_zero()}
        while True:
            hits = [k for k in v if k in self._rows]
            if not hits:
                return v
            p = min(hits)
            row = self._rows[p]
            a, pivot = v[p], row[p]
            if pivot.is_one():
                v = _combine(v, row, None, a)
            else:
                v = _combine(v, row, pivot, a)

    def add(self, vector: SparseVector) -> SparseVector:
        """
        Insert a vector

        Returns:
            The reduced residual; empty (or tag-only) when the vector was
            dependent on what was already stored
        """
        residual = self.reduce(vector)
        if residual:
            p = min(residual)
            lead = residual[p]
            if lead.is_unit() and not lead.is_one():
                inv = lead.inverse_unit()
                residual = {k: c * inv for k, c in residual.items()}
            self._rows[p] = residual
        return residual

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)


def _combine(v: SparseVector, row: SparseVector, scale: Optional[Coefficient], a: Coefficient) -> SparseVector:
    """scale * v - a * row (scale None means 1), dropping zeros"""
    out: SparseVector = {}
    for k, c in v.items():
        out[k] = c if scale is None else scale * c
    for k, c in row.items():
        term = a * c
        out[k] = out[k] - term if k in out else -term
    return {k: c for k, c in out.items() if not c.is_zero()}


def sparse_rank(rows: List[SparseVector]) -> int:
    """Rank of a list of sparse vectors"""
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rank
