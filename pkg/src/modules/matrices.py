"""
Square matrices over the commutative subalgebra F*C

Entries are TorusElements of the rebased spec supported in the first r
coordinates. The cocycle vanishes there, so the entry ring is an ordinary
Laurent polynomial ring and determinants make sense.
"""
from itertools import permutations
from typing import List, Sequence, Tuple

from src.algebra import AlgebraSpec, TorusElement, is_unit, multiply, twist, unit_inverse
from src.scalars import Coefficient
from src.utils.errors import NotInvertibleError, ModuleStructureError

Matrix = Tuple[Tuple[TorusElement, ...], ...]
Vector = Tuple[TorusElement, ...]


def as_matrix(rows: Sequence[Sequence[TorusElement]]) -> Matrix:
    out = tuple(tuple(row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise ModuleStructureError(f"action matrix must be square, got {[len(row) for row in out]} x {len(out)}")
    return out


def mat_identity(spec: AlgebraSpec, d: int) -> Matrix:
    zero, one = TorusElement.zero(spec), TorusElement.one(spec)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def mat_mul(spec: AlgebraSpec, a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            entry = TorusElement.zero(spec)
            for k in range(d):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                entry = entry + multiply(a[i][k], b[k][j])
            row.append(entry)
        out.append(tuple(row))
    return tuple(out)


def mat_apply(spec: AlgebraSpec, a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        entry = TorusElement.zero(spec)
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                entry = entry + multiply(x, y)
        out.append(entry)
    return tuple(out)


def mat_twist(spec: AlgebraSpec, exponent: Sequence[int], a: Matrix) -> Matrix:
    """tau applied entrywise"""
    return tuple(tuple(twist(spec, exponent, x) for x in row) for row in a)


def mat_scale(a: Matrix, kappa: Coefficient) -> Matrix:
    return tuple(tuple(x.scale(kappa) for x in row) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def block_diagonal(spec: AlgebraSpec, a: Matrix, b: Matrix) -> Matrix:
    zero = TorusElement.zero(spec)
    d1, d2 = len(a), len(b)
    top = [tuple(row) + (zero,) * d2 for row in a]
    bottom = [(zero,) * d1 + tuple(row) for row in b]
    return tuple(top + bottom)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def determinant(spec: AlgebraSpec, a: Matrix) -> TorusElement:
    """Leibniz expansion; action matrices are small"""
    d = len(a)
    total = TorusElement.zero(spec)
    minus_one = Coefficient.constant(spec.torsion_order, spec.free_params, -1)
    for perm in permutations(range(d)):
        term = TorusElement.one(spec)
        for i, j in enumerate(perm):
            if a[i][j].is_zero():
                term = None
                break
            term = multiply(term, a[i][j])
        if term is None:
            continue
        total = total + (term if _sign(perm) > 0 else term.scale(minus_one))
    return total


def _minor(a: Matrix, row: int, col: int) -> Matrix:
    return tuple(
        tuple(x for j, x in enumerate(r) if j != col)
        for i, r in enumerate(a)
        if i != row
    )


def adjugate(spec: AlgebraSpec, a: Matrix) -> Matrix:
    d = len(a)
    minus_one = Coefficient.constant(spec.torsion_order, spec.free_params, -1)
    out: List[List[TorusElement]] = [[TorusElement.zero(spec)] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            cof = determinant(spec, _minor(a, i, j))
            out[j][i] = cof if (i + j) % 2 == 0 else cof.scale(minus_one)
    return tuple(tuple(row) for row in out)


def _monomial_inverse(spec: AlgebraSpec, a: Matrix):
    d = len(a)
    positions = []
    for i, row in enumerate(a):
        nonzero = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(nonzero) != 1 or not is_unit(row[nonzero[0]]):
            return None
        positions.append(nonzero[0])
    if sorted(positions) != list(range(d)):
        return None
    out: List[List[TorusElement]] = [[TorusElement.zero(spec)] * d for _ in range(d)]
    for i, j in enumerate(positions):
        out[j][i] = unit_inverse(a[i][j])
    return tuple(tuple(row) for row in out)


def mat_inverse(spec: AlgebraSpec, a: Matrix) -> Matrix:
    """
    Inverse over F*C

    Monomial matrices are inverted directly; otherwise the determinant must
    be a unit and the inverse is the adjugate divided by it.

    Raises:
        NotInvertibleError: when the determinant is not a unit
    """
    fast = _monomial_inverse(spec, a)
    if fast is not None:
        return fast
    det = determinant(spec, a)
    if not is_unit(det):
        raise NotInvertibleError("determinant is not a unit of F*C")
    det_inv = unit_inverse(det)
    adj = adjugate(spec, a)
    return tuple(tuple(multiply(x, det_inv) for x in row) for row in adj)
