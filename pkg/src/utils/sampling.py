"""
Random specs, exponents, elements and sublattices for the randomized checks
"""
import random
from typing import List, Optional, Sequence, Tuple

from src.algebra import AlgebraSpec, TorusElement
from src.lattice import Sublattice
from src.scalars import Coefficient, GammaElement, cyclotomic_field


def random_vector(rng: random.Random, n: int, bound: int = 2) -> Tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def random_gamma(rng: random.Random, torsion_order: int, free_params: int, bound: int = 2) -> GammaElement:
    return GammaElement(
        torsion_order,
        rng.randrange(torsion_order) if torsion_order > 1 else 0,
        random_vector(rng, free_params, bound),
    )


def random_spec(
    rng: random.Random,
    rank: int,
    torsion_order: int = 1,
    free_params: int = 1,
    bound: int = 2,
) -> AlgebraSpec:
    """Every pair i < j gets an independent entry with free exponents in [-bound, bound]"""
    q = {
        (i, j): random_gamma(rng, torsion_order, free_params, bound)
        for i in range(rank)
        for j in range(i + 1, rank)
    }
    return AlgebraSpec.build(rank, torsion_order, free_params, q)


def random_coefficient(rng: random.Random, spec: AlgebraSpec, terms: int = 2, bound: int = 1) -> Coefficient:
    field = cyclotomic_field(spec.torsion_order)
    degree = field.degree
    items = []
    for _ in range(terms):
        coeffs = [rng.randint(-3, 3) for _ in range(degree)]
        if not any(coeffs):
            coeffs[0] = 1
        items.append((random_vector(rng, spec.free_params, bound), field.element(coeffs)))
    out = Coefficient.build(spec.torsion_order, spec.free_params, items)
    return out if not out.is_zero() else spec.one()


def random_element(
    rng: random.Random,
    spec: AlgebraSpec,
    support: int = 3,
    bound: int = 2,
    coefficient_terms: int = 1,
) -> TorusElement:
    terms = [
        (random_vector(rng, spec.rank, bound), random_coefficient(rng, spec, coefficient_terms))
        for _ in range(support)
    ]
    return TorusElement.build(spec, terms)


def random_sublattice(
    rng: random.Random, n: int, generators: Optional[int] = None, bound: int = 3
) -> Sublattice:
    count = generators if generators is not None else rng.randint(1, n)
    rows: List[Sequence[int]] = [random_vector(rng, n, bound) for _ in range(count)]
    return Sublattice.from_generators(rows, n)
