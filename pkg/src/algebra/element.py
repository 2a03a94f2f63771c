"""
Elements of F*A in the normal-ordered monomial basis
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.spec import AlgebraSpec, beta, cocycle, rebase
from src.lattice import int_matrix, unimodular_inverse
from src.scalars import Coefficient
from src.utils.errors import ScalarError, SpecMismatchError

Exponent = Tuple[int, ...]
Terms = Union[Mapping[Exponent, Coefficient], Iterable[Tuple[Exponent, Coefficient]]]


@dataclass(frozen=True)
class TorusElement:
    """
    sum of kappa_a x^a with x^a = x_1^a_1 ... x_n^a_n

    terms is sorted lexicographically by exponent with no zero coefficients,
    so equality is syntactic.
    """
    spec: AlgebraSpec
    terms: Tuple[Tuple[Exponent, Coefficient], ...]

    @classmethod
    def build(cls, spec: AlgebraSpec, terms: Terms) -> "TorusElement":
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[Exponent, Coefficient] = {}
        for exp, coeff in items:
            exp = spec.check_vector(exp)
            if coeff.signature != spec.signature:
                raise SpecMismatchError(f"coefficient ring {coeff.signature} does not match spec {spec.signature}")
            merged[exp] = merged[exp] + coeff if exp in merged else coeff
        kept = tuple(sorted((e, c) for e, c in merged.items() if not c.is_zero()))
        return cls(spec, kept)

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "TorusElement":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: AlgebraSpec) -> "TorusElement":
        return cls.monomial(spec, (0,) * spec.rank)

    @classmethod
    def monomial(cls, spec: AlgebraSpec, exponent: Sequence[int], coeff: Optional[Coefficient] = None) -> "TorusElement":
        return cls.build(spec, [(tuple(exponent), spec.one() if coeff is None else coeff)])

    @classmethod
    def generator(cls, spec: AlgebraSpec, j: int, power: int = 1) -> "TorusElement":
        exponent = [0] * spec.rank
        exponent[j] = power
        return cls.monomial(spec, exponent)

    def _check(self, other: "TorusElement") -> None:
        if self.spec != other.spec:
            raise SpecMismatchError("elements belong to different algebra specs")

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exponent: Sequence[int]) -> Coefficient:
        return dict(self.terms).get(tuple(exponent), self.spec.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        return TorusElement.build(self.spec, list(self.terms) + list(other.terms))

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.spec, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: Union["TorusElement", Coefficient]) -> "TorusElement":
        if isinstance(other, Coefficient):
            return self.scale(other)
        return multiply(self, other)

    def scale(self, kappa: Coefficient) -> "TorusElement":
        return TorusElement.build(self.spec, [(e, c * kappa) for e, c in self.terms])


def multiply(left: TorusElement, right: TorusElement) -> TorusElement:
    """Bilinear extension of x^a x^b = lambda(a, b) x^(a+b)"""
    left._check(right)
    spec = left.spec
    products = []
    for a, ca in left.terms:
        for b, cb in right.terms:
            twist = spec.embed(cocycle(spec, a, b))
            products.append((tuple(x + y for x, y in zip(a, b)), ca * cb * twist))
    return TorusElement.build(spec, products)


def is_unit(element: TorusElement) -> bool:
    """Units are kappa x^a with kappa a unit of the coefficient ring"""
    return len(element.terms) == 1 and element.terms[0][1].is_unit()


def unit_inverse(element: TorusElement) -> TorusElement:
    if not is_unit(element):
        raise ScalarError("only units kappa x^a have inverses")
    (a, kappa), = element.terms
    spec = element.spec
    neg = tuple(-x for x in a)
    # x^a x^-a = lambda(a, -a)
    inv = kappa.inverse_unit() * spec.embed(-cocycle(spec, a, neg))
    return TorusElement.monomial(spec, neg, inv)


def group_commutator(u: TorusElement, v: TorusElement) -> TorusElement:
    """u v u^-1 v^-1 for units, computed through multiply"""
    return multiply(multiply(multiply(u, v), unit_inverse(u)), unit_inverse(v))


def twist(spec: AlgebraSpec, a: Sequence[int], element: TorusElement) -> TorusElement:
    """tau_a(f) = x^a f x^-a, diagonal on monomials: x^c -> beta(a, c) x^c"""
    if element.spec != spec:
        raise SpecMismatchError("element does not belong to this spec")
    return TorusElement.build(spec, [(c, k * spec.embed(beta(spec, a, c))) for c, k in element.terms])


def ordered_power_defect(spec: AlgebraSpec, rows: List[Exponent], b: Sequence[int]):
    """
    q(b) with prod_k (x^{U_k})^{b_k} = q(b) x^{bU} in the old algebra

    Uses (x^u)^k = lambda(u, u)^(k(k-1)/2) x^{ku} for every integer k.
    """
    total = spec.zero_gamma()
    for k, bk in enumerate(b):
        if bk:
            total = total + (bk * (bk - 1) // 2) * cocycle(spec, rows[k], rows[k])
        for l in range(k + 1, len(b)):
            if bk and b[l]:
                total = total + (bk * b[l]) * cocycle(spec, rows[k], rows[l])
    return total


def rebase_element(element: TorusElement, u, new_spec: Optional[AlgebraSpec] = None) -> TorusElement:
    """
    Transport an element to the basis given by the rows of U

    Multiplication commutes with the transport: the new spec's generators
    y_k are sent to x^{U_k}, and x^a is rewritten as a scalar times y^b with
    a = bU.
    """
    spec = element.spec
    u = int_matrix(u, spec.rank)
    target = new_spec if new_spec is not None else rebase(spec, u)
    u_inv = unimodular_inverse(u)
    rows = [tuple(int(x) for x in row) for row in u]
    terms = []
    for a, kappa in element.terms:
        b = tuple(int(x) for x in int_matrix([a], spec.rank).dot(u_inv)[0])
        defect = ordered_power_defect(spec, rows, b)
        terms.append((b, kappa * spec.embed(-defect)))
    return TorusElement.build(target, terms)
