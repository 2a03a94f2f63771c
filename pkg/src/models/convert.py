"""
Conversions between file schemas and the algebraic objects they describe
"""
from typing import List, Sequence, Union

from src.algebra import AlgebraSpec, TorusElement
from src.lattice import Sublattice
from src.models.schemas import CoefficientTerm, ElementFile, ElementTerm, QEntry, SpecFile, SublatticeFile
from src.scalars import Coefficient, GammaElement, coefficient_from_terms
from src.utils.errors import InputFormatError


def spec_from_file(data: SpecFile) -> AlgebraSpec:
    q = {
        (entry.i - 1, entry.j - 1): GammaElement(data.torsion_order, entry.tors, tuple(entry.free))
        for entry in data.q
    }
    return AlgebraSpec.build(data.rank, data.torsion_order, data.free_params, q)


def spec_to_file(spec: AlgebraSpec) -> SpecFile:
    return SpecFile(
        rank=spec.rank,
        torsion_order=spec.torsion_order,
        free_params=spec.free_params,
        q=[QEntry(i=i + 1, j=j + 1, tors=g.tors, free=list(g.free)) for (i, j), g in spec.q],
    )


def sublattice_from_file(data: Union[SublatticeFile, Sequence[Sequence[int]]], n: int) -> Sublattice:
    rows = data.basis if isinstance(data, SublatticeFile) else data
    for k, row in enumerate(rows):
        if len(row) != n:
            raise InputFormatError(f"basis[{k}]: expected {n} entries, got {len(row)}")
    return Sublattice.from_generators(rows, n)


def coefficient_from_file(terms: List[CoefficientTerm], spec: AlgebraSpec) -> Coefficient:
    for k, term in enumerate(terms):
        if len(term.free_exponents) != spec.free_params:
            raise InputFormatError(f"coeff[{k}].free_exponents: expected {spec.free_params} exponents")
    return coefficient_from_terms(spec.torsion_order, spec.free_params, [t.model_dump() for t in terms])


def coefficient_to_file(coeff: Coefficient) -> List[CoefficientTerm]:
    return [CoefficientTerm(**term) for term in coeff.to_terms()]


def element_from_file(data: ElementFile, spec: AlgebraSpec) -> TorusElement:
    terms = []
    for k, term in enumerate(data.terms):
        if len(term.exponent) != spec.rank:
            raise InputFormatError(f"terms[{k}].exponent: expected {spec.rank} entries")
        terms.append((tuple(term.exponent), coefficient_from_file(term.coeff, spec)))
    return TorusElement.build(spec, terms)


def element_to_file(element: TorusElement) -> ElementFile:
    return ElementFile(
        terms=[ElementTerm(exponent=list(exp), coeff=coefficient_to_file(c)) for exp, c in element.terms]
    )
