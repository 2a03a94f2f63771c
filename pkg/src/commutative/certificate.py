"""
Finite-length certificate: gk(M) + max commutative rank = rk(A)
"""
from typing import Optional

from src.algebra import AlgebraSpec
from src.commutative.rank import max_commutative_rank
from src.models.reports import HolonomicCertificate


def holonomic_certificate(spec: AlgebraSpec, gk_estimate: int, search_bound: Optional[int] = None) -> HolonomicCertificate:
    """
    Certify finite length when the growth degree and the commutative rank
    add up to n and the rank was computed exactly
    """
    rank_report = max_commutative_rank(spec, search_bound)
    balanced = gk_estimate + rank_report.rank == spec.rank
    if not rank_report.exact:
        verdict = "inconclusive (heuristic rank)"
    elif balanced:
        verdict = "finite length"
    else:
        verdict = "not certified"
    return HolonomicCertificate(
        certified=verdict == "finite length",
        verdict=verdict,
        gk_estimate=gk_estimate,
        max_commutative_rank=rank_report.rank,
        rank=spec.rank,
        exact_rank=rank_report.exact,
    )
