"""
Bounded torsion, dimension and low-dimension probes

These are semi-decisions: a found annihilator is a proof of torsion, "none
found" only holds up to the degree bound.
"""
import logging
from itertools import combinations, product
from typing import Iterable, List, Optional

from src.algebra import TorusElement, has_trivial_center, ordered_power_defect, sub_spec
from src.commutative import max_commutative_rank, witness_lattice
from src.lattice import Sublattice
from src.models.convert import element_to_file
from src.models.reports import DimensionCandidate, DimensionReport, LowDimensionReport, TorsionReport
from src.models.schemas import Bounds
from src.modules.c_finite import CFiniteModule
from src.modules.window import cyclicity_probe, gk_growth_estimate
from src.scalars import EchelonBasis
from src.utils import config
from src.utils.errors import LatticeError, ModuleStructureError

logger = logging.getLogger(__name__)


def _box(rank: int, bound: int) -> List[tuple]:
    """Exponents in [-bound, bound]^rank, smallest first, positive before negative"""

    def order(y):
        return max((abs(x) for x in y), default=0), sum(abs(x) for x in y), tuple(-x for x in y)

    return sorted(product(range(-bound, bound + 1), repeat=rank), key=order)


def torsion_search(module, lattice: Sublattice, v, deg_bound: Optional[int] = None) -> TorsionReport:
    """
    Nonzero gamma in F*B with support in [-D, D]^rank(B) and gamma v = 0

    Orbit vectors x^b v are fed to an echelon basis with one tag key per
    exponent; the first tag-only residual is a dependency, read off as the
    coefficients of gamma.

    Args:
        module: CFiniteModule or ModuleSum
        lattice: B, in ambient coordinates
        v: Nonzero module element
        deg_bound: D

    Returns:
        TorsionReport, with the annihilator written in the HNF basis of B
    """
    deg_bound = config.DEG_BOUND if deg_bound is None else deg_bound
    spec = module.spec
    if lattice.ambient_rank != spec.rank:
        raise LatticeError(f"B lives in Z^{lattice.ambient_rank}, spec has rank {spec.rank}")
    if module.is_zero_vector(v):
        raise ModuleStructureError("torsion is probed on a nonzero vector")
    basis_rows = [list(row) for row in lattice.rows]
    if lattice.rank == 0:
        return TorsionReport(found=False, sublattice=basis_rows, bound=deg_bound)

    points = _box(lattice.rank, deg_bound)
    exponents = [
        tuple(sum(y[k] * lattice.rows[k][i] for k in range(lattice.rank)) for i in range(spec.rank))
        for y in points
    ]
    echelon = EchelonBasis()
    relation = None
    for idx, b in enumerate(exponents):
        row = {(0, key): c for key, c in module.sparse(module.act_ambient(b, v)).items()}
        row[(1, idx)] = spec.one()
        residual = echelon.add(row)
        if residual and all(key[0] == 1 for key in residual):
            relation = {key[1]: c for key, c in residual.items()}
            break

    if relation is None:
        logger.debug("no annihilator of degree <= %d over B of rank %d", deg_bound, lattice.rank)
        return TorsionReport(found=False, sublattice=basis_rows, bound=deg_bound)

    total = None
    for idx, c in relation.items():
        w = module.scale(module.act_ambient(exponents[idx], v), c)
        total = w if total is None else module.add(total, w)
    verified = module.is_zero_vector(total)

    # x^b = lambda-defect * z^y with z^y the normal-ordered monomial of F*B
    inner = sub_spec(spec, lattice)
    rows = [tuple(row) for row in lattice.rows]
    terms = [
        (points[idx], c * spec.embed(-ordered_power_defect(spec, rows, points[idx])))
        for idx, c in relation.items()
    ]
    gamma = TorusElement.build(inner, terms)
    logger.debug("annihilator with %d terms found over B of rank %d", len(terms), lattice.rank)
    return TorsionReport(
        found=True,
        sublattice=basis_rows,
        bound=deg_bound,
        annihilator=element_to_file(gamma),
        verified=verified,
    )


def _default_candidates(module) -> List[Sublattice]:
    spec = module.spec
    n = spec.rank
    if isinstance(module, CFiniteModule):
        frames, cs = [module.split], [module.split[: module.r]]
    else:
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        frames = [identity] + [m.split for m in module.components]
        cs = [m.split[: m.r] for m in module.components]

    found = [Sublattice.zero(n)]
    for frame in frames:
        for size in range(1, n + 1):
            for rows in combinations(frame, size):
                found.append(Sublattice.from_generators(rows, n))
    for rows in cs:
        found.append(Sublattice.from_generators(rows, n))
    found.append(witness_lattice(max_commutative_rank(spec), n))

    unique, seen = [], set()
    for lattice in found:
        if lattice.rows not in seen:
            seen.add(lattice.rows)
            unique.append(lattice)
    return unique


def dimension_probe(
    module,
    k_max: Optional[int] = None,
    deg_bound: Optional[int] = None,
    candidates: Optional[Iterable[Sublattice]] = None,
) -> DimensionReport:
    """
    Greatest rank of a candidate B such that M is not F*B-torsion

    M is not torsion over B as soon as one free generator has no
    annihilator up to the bound. The growth degree is measured alongside
    when k_max is given.
    """
    deg_bound = config.DEG_BOUND if deg_bound is None else deg_bound
    pool = list(candidates) if candidates is not None else _default_candidates(module)
    generators = module.free_generators()
    rows = []
    best = 0
    for lattice in pool:
        witness = None
        if lattice.rank == 0:
            witness = 0 if generators else None
        else:
            for idx, g in enumerate(generators):
                if not torsion_search(module, lattice, g, deg_bound).found:
                    witness = idx
                    break
        non_torsion = witness is not None
        if non_torsion:
            best = max(best, lattice.rank)
        rows.append(
            DimensionCandidate(
                basis=[list(row) for row in lattice.rows],
                rank=lattice.rank,
                non_torsion=non_torsion,
                witness_generator=None if witness is None else witness + 1,
            )
        )

    gk_degree, agrees = None, None
    if k_max is not None:
        gk_degree = gk_growth_estimate(module, None, k_max).degree
        agrees = gk_degree == best if gk_degree is not None else None
    logger.debug("dimension probe: %d over %d candidates", best, len(pool))
    return DimensionReport(dimension=best, candidates=rows, gk_degree=gk_degree, agrees_with_growth=agrees)


def low_dimension_report(module: CFiniteModule, v=None, bounds: Optional[Bounds] = None) -> LowDimensionReport:
    """
    Evidence that a module of growth degree at most 1 over an algebra with
    trivial center is artinian and cyclic
    """
    bounds = bounds or Bounds()
    v = module.free_generators()[0] if v is None else v
    growth = gk_growth_estimate(module, v, max(bounds.k_max, 3))
    trivial = has_trivial_center(module.spec)
    cyclic = cyclicity_probe(module, v, bounds.k_max).generates_interior_window

    if not trivial:
        verdict = "hypothesis not met"
    elif growth.degree is None:
        verdict = "inconclusive"
    elif growth.degree > 1:
        verdict = "gk above 1"
    elif cyclic:
        verdict = "artinian and cyclic (evidence)"
    else:
        verdict = "inconclusive"
    return LowDimensionReport(
        gk_degree=growth.degree, trivial_center=trivial, cyclic_evidence=cyclic, verdict=verdict
    )
