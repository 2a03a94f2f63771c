"""
Growth and cyclicity measured in truncation windows

Spans are ranks over the fraction field of the coefficient ring, computed
incrementally with EchelonBasis. Exponents a of x^a are ambient and range
over boxes |a|_inf <= k.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from src.models.reports import CyclicityReport, GrowthReport
from src.modules.c_finite import CFiniteModule
from src.scalars import EchelonBasis
from src.utils import config
from src.utils.errors import GrowthUnstableError, ModuleStructureError, QTorusError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncationWindow:
    """Monomials y^c g_l of F*C^d with |c|_inf <= radius"""
    radius: int
    r: int
    d: int

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"window radius must be nonnegative, got {self.radius}")

    @property
    def dimension(self) -> int:
        return self.d * (2 * self.radius + 1) ** self.r

    def contains(self, key: Tuple[int, Tuple[int, ...]]) -> bool:
        _, c = key
        return all(abs(x) <= self.radius for x in c)

    def monomials(self) -> Iterator[Tuple[int, Tuple[int, ...]]]:
        for l in range(self.d):
            for c in product(range(-self.radius, self.radius + 1), repeat=self.r):
                yield l, tuple(c)


def shell(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Exponents with |a|_inf exactly k"""
    for a in product(range(-k, k + 1), repeat=n):
        if max((abs(x) for x in a), default=0) == k:
            yield a


def growth_degree(dims: Sequence[int]) -> Optional[int]:
    """
    Order of the first finite difference whose last three values agree

    Returns:
        The degree, or None when no difference has stabilized
    """
    seq = list(dims)
    degree = 0
    while len(seq) >= 3:
        tail = seq[-3:]
        if tail[0] == tail[1] == tail[2] and tail[0] != 0:
            return degree
        seq = [b - a for a, b in zip(seq, seq[1:])]
        degree += 1
    return None


def _generating_vectors(module, v):
    vectors = module.free_generators() if v is None else [v]
    if any(module.is_zero_vector(w) for w in vectors):
        raise ModuleStructureError("growth is measured from a nonzero vector")
    return vectors


def gk_growth_estimate(module, v=None, k_max: Optional[int] = None) -> GrowthReport:
    """
    dim span{x^a w : |a|_inf <= k, w in V} for k = 0..k_max

    Args:
        module: CFiniteModule or ModuleSum
        v: Generating vector; all free generators when omitted
        k_max: Largest box radius, at least 3

    Returns:
        GrowthReport; degree is None when the differences did not stabilize
    """
    k_max = config.K_MAX if k_max is None else k_max
    if k_max < 3:
        raise QTorusError(f"k_max must be at least 3, got {k_max}")
    vectors = _generating_vectors(module, v)
    n = module.spec.rank
    basis = EchelonBasis()
    dims: List[int] = []
    for k in range(k_max + 1):
        for a in shell(n, k):
            for w in vectors:
                basis.add(module.sparse(module.act_ambient(a, w)))
        dims.append(basis.rank)
        logger.debug("growth window k=%d: dim %d", k, basis.rank)

    degree = growth_degree(dims)
    if degree is None:
        logger.info("growth differences did not stabilize by k=%d: %s", k_max, dims)
    return GrowthReport(stable=degree is not None, degree=degree, dims=dims, k_max=k_max)


def require_degree(report: GrowthReport) -> int:
    if report.degree is None:
        raise GrowthUnstableError(f"growth differences did not stabilize by k={report.k_max}: {report.dims}")
    return report.degree


def cyclicity_probe(module: CFiniteModule, v, k: int) -> CyclicityReport:
    """
    How much of the truncation window the orbit span of v fills

    The interior window shrinks the box by the support radius of the action
    matrices; every interior monomial lying in the span is taken as evidence
    that v generates M.
    """
    if module.is_zero_vector(v):
        raise ModuleStructureError("cyclicity is probed from a nonzero vector")
    if k < 0:
        raise QTorusError(f"k must be nonnegative, got {k}")
    basis = EchelonBasis()
    for radius in range(k + 1):
        for a in shell(module.rank, radius):
            basis.add(module.sparse(module.act_ambient(a, v)))

    window = TruncationWindow(k + module.vector_radius(v), module.r, module.d)
    interior_radius = k - module.action_radius
    attained, interior_dim = 0, 0
    if interior_radius >= 0:
        interior = TruncationWindow(interior_radius, module.r, module.d)
        interior_dim = interior.dimension
        one = module.local.one()
        attained = sum(1 for key in interior.monomials() if basis.contains({key: one}))

    return CyclicityReport(
        k=k,
        span_dim=basis.rank,
        window_radius=window.radius,
        window_dim=window.dimension,
        interior_radius=interior_radius,
        interior_dim=interior_dim,
        interior_attained=attained,
        ratio=str(Fraction(basis.rank, window.dimension)),
        generates_interior_window=interior_dim > 0 and attained == interior_dim,
    )
