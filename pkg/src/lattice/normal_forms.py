"""
Hermite and Smith normal forms over the integers

Matrices are numpy arrays of dtype=object holding Python ints, so entries
never overflow however much they swell during elimination.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.errors import LatticeError, NotUnimodularError

IntMatrix = np.ndarray


def int_matrix(rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """
    Build an object-dtype integer matrix from nested sequences

    Args:
        rows: Row vectors
        ncols: Expected width; required to shape an empty matrix

    Returns:
        Matrix of Python ints with shape (len(rows), ncols)
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        if ncols is not None and rows.shape[1] != ncols:
            raise LatticeError(f"expected {ncols} columns, got {rows.shape[1]}")
        out = np.zeros(rows.shape, dtype=object)
        for (i, j), x in np.ndenumerate(rows):
            out[i, j] = int(x)
        return out

    rows = [list(row) for row in rows]
    if not rows:
        return np.zeros((0, ncols or 0), dtype=object)
    width = len(rows[0]) if ncols is None else ncols
    out = np.zeros((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise LatticeError(f"row {i} has length {len(row)}, expected {width}")
        for j, x in enumerate(row):
            out[i, j] = int(x)
    return out


def identity(n: int) -> IntMatrix:
    """n x n identity with Python int entries"""
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product; safe for empty inner dimensions"""
    if a.shape[1] != b.shape[0]:
        raise LatticeError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    return a.dot(b)


def to_rows(m: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def matrices_equal(a: IntMatrix, b: IntMatrix) -> bool:
    return a.shape == b.shape and to_rows(a) == to_rows(b)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def exgcd(a: int, b: int) -> List[List[int]]:
    """
    2x2 integer matrix of determinant 1 sending (a, b) to (gcd(a, b), 0)

    If a is nonnegative and b is zero the identity is returned, so rows that
    are already clear are left untouched.
    """
    if b == 0:
        return [[1, 0], [0, 1]] if a >= 0 else [[-1, 0], [0, -1]]
    g, x, y = _xgcd(a, b)
    return [[x, y], [-b // g, a // g]]


def hermite_normal_form(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form with its unimodular transform

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    collect at the bottom.

    Args:
        m: Integer matrix (rows x cols)

    Returns:
        (H, U) with U unimodular and U @ m == H
    """
    h = int_matrix(m)
    rows, cols = h.shape
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if h[i, c] == 0:
                continue
            t = np.array(exgcd(h[r, c], h[i, c]), dtype=object)
            h[[r, i]] = t.dot(h[[r, i]])
            u[[r, i]] = t.dot(u[[r, i]])
        pivot = h[r, c]
        if pivot == 0:
            continue
        if pivot < 0:
            h[r] = -h[r]
            u[r] = -u[r]
        for k in range(r):
            q = h[k, c] // h[r, c]
            if q:
                h[k] = h[k] - q * h[r]
                u[k] = u[k] - q * u[r]
        r += 1
    return h, u


def is_hermite_normal_form(h: IntMatrix) -> bool:
    """Check the row-HNF shape: echelon, positive pivots, reduced above pivots"""
    h = int_matrix(h)
    last_pivot = -1
    seen_zero_row = False
    for row in h:
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if not nonzero:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        p = nonzero[0]
        if p <= last_pivot or row[p] <= 0:
            return False
        last_pivot = p
    for i, row in enumerate(h):
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if not nonzero:
            break
        p = nonzero[0]
        for k in range(i):
            if not 0 <= h[k, p] < row[p]:
                return False
    return True


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination"""
    a = [[int(x) for x in row] for row in int_matrix(m)]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise LatticeError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(m: IntMatrix) -> bool:
    m = int_matrix(m)
    return m.shape[0] == m.shape[1] and abs(determinant(m)) == 1


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix (its HNF is the identity)"""
    m = int_matrix(m)
    if not is_unimodular(m):
        raise NotUnimodularError(f"matrix {to_rows(m)} is not unimodular")
    h, u = hermite_normal_form(m)
    if not matrices_equal(h, identity(m.shape[0])):
        raise NotUnimodularError("HNF of a unimodular matrix must be the identity")
    return u


@dataclass(frozen=True, eq=False)
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal"""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(int(self.D[i, i]) for i in range(min(self.D.shape)))

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _smallest_nonzero(d: IntMatrix, t: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, d.shape[0]):
        for j in range(t, d.shape[1]):
            x = d[i, j]
            if x != 0 and (best is None or abs(x) < abs(d[best])):
                best = (i, j)
    return best


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form with both unimodular transforms

    Args:
        m: Integer matrix

    Returns:
        SmithDecomposition with nonnegative diagonal satisfying the divisibility chain
    """
    d = int_matrix(m)
    rows, cols = d.shape
    u = identity(rows)
    v = identity(cols)

    for t in range(min(rows, cols)):
        pivot = _smallest_nonzero(d, t)
        if pivot is None:
            break
        while True:
            pivot = _smallest_nonzero(d, t)
            i, j = pivot
            if i != t:
                d[[t, i]] = d[[i, t]]
                u[[t, i]] = u[[i, t]]
            if j != t:
                d[:, [t, j]] = d[:, [j, t]]
                v[:, [t, j]] = v[:, [j, t]]

            clear = True
            for i in range(t + 1, rows):
                q = d[i, t] // d[t, t]
                if q:
                    d[i] = d[i] - q * d[t]
                    u[i] = u[i] - q * u[t]
                if d[i, t] != 0:
                    clear = False
            for j in range(t + 1, cols):
                q = d[t, j] // d[t, t]
                if q:
                    d[:, j] = d[:, j] - q * d[:, t]
                    v[:, j] = v[:, j] - q * v[:, t]
                if d[t, j] != 0:
                    clear = False
            if not clear:
                continue

            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i, j] % d[t, t]),
                None,
            )
            if bad is None:
                break
            d[t] = d[t] + d[bad]
            u[t] = u[t] + u[bad]

        if d[t, t] < 0:
            d[t] = -d[t]
            u[t] = -u[t]

    return SmithDecomposition(U=u, D=d, V=v)
