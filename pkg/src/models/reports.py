"""
Structured reports returned by verification operations and printed by the CLI
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from src.models.schemas import ElementFile


class CenterReport(BaseModel):
    center_basis: List[List[int]] = Field(description="HNF basis of the radical of beta")
    trivial: bool = Field(description="True when the center is the scalars")


class CommutativityReport(BaseModel):
    commutative: bool
    basis: List[List[int]] = Field(description="HNF basis that was tested")
    failing_pairs: List[List[int]] = Field(
        default_factory=list, description="1-based basis index pairs whose commutator is nontrivial"
    )


class MaxCommutativeReport(BaseModel):
    rank: int = Field(description="Largest rank of a commutative sublattice found")
    witness: List[List[int]] = Field(description="Saturated commutative sublattice of that rank")
    exact: bool = Field(description="True when the rank is provably maximal")
    upper_bound: int = Field(description="Rank bound from the rational ranks of the free forms")
    nodes_visited: int = Field(default=0, description="Search nodes visited on the heuristic path")


class ComplementSolution(BaseModel):
    s: int = Field(ge=1, description="Common exponent s")
    mu: List[List[int]] = Field(description="Exponents c_j of the monomials mu_j in C-coordinates")
    E_basis: List[List[int]] = Field(description="Generators c_j + s e_j of the virtual complement")
    C_basis: List[List[int]] = Field(default_factory=list, description="Basis of C the coordinates refer to")
    split: List[List[int]] = Field(default_factory=list, description="Basis of Z^n extending C")


class VirtualComplementReport(BaseModel):
    passed: bool
    rank_sum_ok: bool = Field(description="rank C + rank E = n")
    index: Optional[int] = Field(description="Index of C + E in Z^n; null when infinite")
    finite_index: bool
    commutative: bool = Field(description="F*E is commutative")
    intersection: List[List[int]] = Field(description="HNF basis of C and E intersected")


class HolonomicCertificate(BaseModel):
    certified: bool
    verdict: Literal["finite length", "not certified", "inconclusive (heuristic rank)"]
    gk_estimate: int
    max_commutative_rank: int
    rank: int
    exact_rank: bool


class ConsistencyReport(BaseModel):
    passed: bool
    r: int
    d: int
    failing_pairs: List[List[int]] = Field(
        default_factory=list, description="Generator pairs (1-based, split coordinates) violating the relation"
    )
    bad_inverses: List[int] = Field(default_factory=list, description="Generators whose inverse check failed")


class ExteriorReport(BaseModel):
    passed: bool
    exponent: int = Field(description="Power of the commutation scalar, equal to d")
    determinants: Dict[str, ElementFile] = Field(description="det A_j keyed by 1-based generator index")
    failing_pairs: List[List[int]] = Field(default_factory=list)
    power_module_consistent: bool = Field(
        description="The determinants define a rank-1 module over the s-th power cocycle spec"
    )


class GrowthReport(BaseModel):
    stable: bool
    degree: Optional[int] = Field(description="Growth degree, null when the differences did not stabilize")
    dims: List[int] = Field(description="dim span{x^a v : |a| <= k} for k = 0..k_max")
    k_max: int


class TorsionReport(BaseModel):
    found: bool
    sublattice: List[List[int]]
    bound: int
    annihilator: Optional[ElementFile] = Field(
        default=None, description="Nonzero gamma in F*B with gamma v = 0, exponents in B-coordinates"
    )
    verified: bool = Field(default=False, description="Annihilator re-checked by direct action")


class DimensionCandidate(BaseModel):
    basis: List[List[int]]
    rank: int
    non_torsion: bool = Field(description="Some free generator has no annihilator in F*B up to the bound")
    witness_generator: Optional[int] = Field(default=None, description="1-based index of that generator")


class DimensionReport(BaseModel):
    dimension: int = Field(description="Largest rank of a candidate B over which M is not torsion")
    candidates: List[DimensionCandidate]
    gk_degree: Optional[int] = Field(default=None, description="Growth degree, when growth was measured")
    agrees_with_growth: Optional[bool] = None


class CyclicityReport(BaseModel):
    k: int
    span_dim: int = Field(description="dim span{x^a v : |a| <= k}")
    window_radius: int
    window_dim: int
    interior_radius: int = Field(description="Window radius minus the action support radius")
    interior_dim: int
    interior_attained: int = Field(description="Interior monomials lying in the span")
    ratio: str = Field(description="span_dim / window_dim as an exact fraction")
    generates_interior_window: bool


class LowDimensionReport(BaseModel):
    gk_degree: Optional[int]
    trivial_center: bool
    cyclic_evidence: bool
    verdict: Literal["artinian and cyclic (evidence)", "hypothesis not met", "gk above 1", "inconclusive"]


class CheckResult(BaseModel):
    name: str
    status: Literal["pass", "fail", "hypothesis not met", "skipped"]
    detail: Dict[str, Any] = Field(default_factory=dict)


class TheoremBReport(BaseModel):
    hypothesis_met: bool
    flags: List[str] = Field(default_factory=list)
    reduced_spec: Dict[str, Any]
    subgroup: List[List[int]]
    checks: List[CheckResult] = Field(default_factory=list)
    raw: Dict[str, Any] = Field(default_factory=dict, description="Intermediate data for audit")

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


class AcceptanceMatrix(BaseModel):
    name: str
    passed: bool
    checks: List[CheckResult]


