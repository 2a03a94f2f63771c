"""
Exact arithmetic in Q(zeta_N)

Numbers are rational coefficient vectors reduced modulo the N-th cyclotomic
polynomial. N = 1 and N = 2 both give Q.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly, invert

from src.utils.errors import ScalarError

_X = Symbol("x")

Rationalish = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> Tuple[Fraction, ...]:
    """Coefficients of Phi_N, lowest degree first (monic)"""
    if order < 1:
        raise ScalarError(f"cyclotomic order must be positive, got {order}")
    poly = Poly(cyclotomic_poly(order, _X), _X)
    return tuple(Fraction(int(c)) for c in reversed(poly.all_coeffs()))


def _reduce(coeffs: Sequence[Fraction], phi: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    d = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, d - 1, -1):
        lead = c[k]
        if lead:
            for i in range(d + 1):
                c[k - d + i] -= lead * phi[i]
    c = c[:d]
    return tuple(c + [Fraction(0)] * (d - len(c)))


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coeffs: Tuple[Fraction, ...]

    @property
    def field(self) -> "CyclotomicField":
        return cyclotomic_field(self.order)

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.order != other.order:
            raise ScalarError(f"cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})")

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self + (-other)

    def __mul__(self, other: Union["CyclotomicNumber", Rationalish]) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        product[i + j] += a * b
        return self.field.element(product)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self == self.field.one()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ScalarError("zero has no inverse")
        field = self.field
        if field.degree == 1:
            return field.element([1 / self.coeffs[0]])
        num = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        mod = Poly([Rational(c.numerator, c.denominator) for c in reversed(field.phi)], _X, domain=QQ)
        inv = invert(num, mod)
        return field.element(Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs()))

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]


class CyclotomicField:
    """Q(zeta_N) with basis 1, zeta, ..., zeta^(d-1), d = deg Phi_N"""

    def __init__(self, order: int):
        self.order = order
        self.phi = cyclotomic_modulus(order)
        self.degree = len(self.phi) - 1

    def element(self, coeffs: Sequence[Rationalish]) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, _reduce(list(coeffs), self.phi))

    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, (Fraction(0),) * self.degree)

    def one(self) -> CyclotomicNumber:
        return self.rational(1)

    def rational(self, value: Rationalish) -> CyclotomicNumber:
        return self.element([Fraction(value)])

    def zeta(self, k: int = 1) -> CyclotomicNumber:
        power = [Fraction(0)] * (k % self.order) + [Fraction(1)]
        return self.element(power)

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)
