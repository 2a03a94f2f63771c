"""
Coefficients: Laurent polynomials in t_1..t_m over Q(zeta_N)
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from src.scalars.cyclotomic import CyclotomicNumber, cyclotomic_field
from src.scalars.gamma import GammaElement
from src.utils.errors import ScalarError

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Coefficient:
    """
    Finitely supported map Z^m -> Q(zeta_N)

    terms is sorted by exponent and never holds a zero value, so equality of
    dataclass fields is equality in the ring. Use Coefficient.build rather
    than the raw constructor.
    """
    order: int
    free_params: int
    terms: Tuple[Tuple[Exponent, CyclotomicNumber], ...]

    @classmethod
    def build(
        cls, order: int, free_params: int, terms: Union[Mapping, Iterable[Tuple[Exponent, CyclotomicNumber]]]
    ) -> "Coefficient":
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[Exponent, CyclotomicNumber] = {}
        for exp, value in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != free_params:
                raise ScalarError(f"exponent {exp} has the wrong number of parameters ({free_params})")
            if value.order != order:
                raise ScalarError(f"value lives in Q(zeta_{value.order}), expected Q(zeta_{order})")
            merged[exp] = merged[exp] + value if exp in merged else value
        kept = tuple(sorted((e, v) for e, v in merged.items() if not v.is_zero()))
        return cls(order, free_params, kept)

    @classmethod
    def zero(cls, order: int, free_params: int) -> "Coefficient":
        return cls(order, free_params, ())

    @classmethod
    def constant(cls, order: int, free_params: int, value: Union[int, Fraction, CyclotomicNumber] = 1) -> "Coefficient":
        if not isinstance(value, CyclotomicNumber):
            value = cyclotomic_field(order).rational(value)
        return cls.build(order, free_params, [((0,) * free_params, value)])

    @classmethod
    def monomial(cls, order: int, exponent: Sequence[int], value=1) -> "Coefficient":
        exponent = tuple(exponent)
        if not isinstance(value, CyclotomicNumber):
            value = cyclotomic_field(order).rational(value)
        return cls.build(order, len(exponent), [(exponent, value)])

    @property
    def signature(self) -> Tuple[int, int]:
        return self.order, self.free_params

    def _check(self, other: "Coefficient") -> None:
        if self.signature != other.signature:
            raise ScalarError(f"coefficient rings differ: {self.signature} vs {other.signature}")

    def as_dict(self) -> Dict[Exponent, CyclotomicNumber]:
        return dict(self.terms)

    def __add__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient.build(self.order, self.free_params, list(self.terms) + list(other.terms))

    def __neg__(self) -> "Coefficient":
        return Coefficient(self.order, self.free_params, tuple((e, -v) for e, v in self.terms))

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        return self + (-other)

    def __mul__(self, other: Union["Coefficient", int, Fraction]) -> "Coefficient":
        if isinstance(other, (int, Fraction)):
            return Coefficient.build(self.order, self.free_params, [(e, v * other) for e, v in self.terms])
        self._check(other)
        products = [
            (tuple(a + b for a, b in zip(e1, e2)), v1 * v2)
            for e1, v1 in self.terms
            for e2, v2 in other.terms
        ]
        return Coefficient.build(self.order, self.free_params, products)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self == Coefficient.constant(self.order, self.free_params)

    def is_unit(self) -> bool:
        """Units of the Laurent ring are single terms with a nonzero value"""
        return len(self.terms) == 1

    def inverse_unit(self) -> "Coefficient":
        if not self.is_unit():
            raise ScalarError("only single-term coefficients are invertible")
        (exp, value), = self.terms
        return Coefficient.build(self.order, self.free_params, [(tuple(-e for e in exp), value.inverse())])

    def div_unit(self, unit: "Coefficient") -> "Coefficient":
        self._check(unit)
        return self * unit.inverse_unit()

    def exact_div(self, divisor: "Coefficient") -> "Coefficient":
        """
        Exact quotient self / divisor

        Lex-leading-term division. Every quotient exponent of an exact
        division lies in the box spanned by the exponent ranges of the
        operands, so leaving that box proves the division is not exact.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ScalarError("division by zero coefficient")
        if divisor.is_unit():
            return self.div_unit(divisor)
        if self.is_zero():
            return self

        m = self.free_params
        lows = [min(e[i] for e, _ in self.terms) - max(e[i] for e, _ in divisor.terms) for i in range(m)]
        highs = [max(e[i] for e, _ in self.terms) - min(e[i] for e, _ in divisor.terms) for i in range(m)]

        lead_exp, lead_val = divisor.terms[-1]
        lead_inv = lead_val.inverse()
        remainder = self
        quotient_terms: List[Tuple[Exponent, CyclotomicNumber]] = []
        while not remainder.is_zero():
            exp, val = remainder.terms[-1]
            q_exp = tuple(a - b for a, b in zip(exp, lead_exp))
            if any(not lows[i] <= q_exp[i] <= highs[i] for i in range(m)):
                raise ScalarError("coefficient division is not exact")
            q_term = Coefficient.build(self.order, m, [(q_exp, val * lead_inv)])
            quotient_terms.extend(q_term.terms)
            remainder = remainder - q_term * divisor
        return Coefficient.build(self.order, m, quotient_terms)

    def substitute(self, values: Sequence[Fraction]) -> CyclotomicNumber:
        """Evaluate t_i at nonzero rationals, keeping zeta symbolic"""
        field = cyclotomic_field(self.order)
        total = field.zero()
        for exp, value in self.terms:
            scale = Fraction(1)
            for t, e in zip(values, exp):
                scale *= Fraction(t) ** e
            total = total + value * scale
        return total

    def to_terms(self) -> List[dict]:
        return [
            {"free_exponents": list(exp), "cyclotomic": value.to_strings()}
            for exp, value in self.terms
        ]


def embed_unit(g: GammaElement) -> Coefficient:
    """zeta^tors * t^free as a single-term coefficient"""
    field = cyclotomic_field(g.modulus)
    return Coefficient.build(g.modulus, g.free_params, [(g.free, field.zeta(g.tors))])


def coeff_add(c1: Coefficient, c2: Coefficient) -> Coefficient:
    return c1 + c2


def coeff_mul(c1: Coefficient, c2: Coefficient) -> Coefficient:
    return c1 * c2


def coeff_eq(c1: Coefficient, c2: Coefficient) -> bool:
    return c1 == c2


def coeff_div_unit(c: Coefficient, unit: Coefficient) -> Coefficient:
    return c.div_unit(unit)


def coeff_inverse_unit(unit: Coefficient) -> Coefficient:
    return unit.inverse_unit()


def coeff_exact_div(a: Coefficient, b: Coefficient) -> Coefficient:
    return a.exact_div(b)


def coefficient_from_terms(order: int, free_params: int, terms: Sequence[Mapping]) -> Coefficient:
    """Inverse of Coefficient.to_terms"""
    field = cyclotomic_field(order)
    items = []
    for term in terms:
        items.append(
            (tuple(term["free_exponents"]), field.element([Fraction(x) for x in term["cyclotomic"]]))
        )
    return Coefficient.build(order, free_params, items)
