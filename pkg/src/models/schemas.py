"""
File formats for specs, sublattices, elements, modules, nilpotent data and scenarios

Indices in files are 1-based. Exact rationals are "p/q" strings.
"""
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.utils import config


class QEntry(BaseModel):
    """One multiparameter q_ij = zeta^tors * t^free, listed for i < j"""
    i: int = Field(ge=1, description="Row index (1-based)")
    j: int = Field(ge=1, description="Column index (1-based), greater than i")
    tors: int = Field(default=0, description="Exponent of the primitive N-th root of unity")
    free: List[int] = Field(default_factory=list, description="Exponents of t_1..t_m")


class SpecFile(BaseModel):
    rank: int = Field(ge=1, description="Rank n of A = Z^n")
    torsion_order: int = Field(default=1, ge=1, description="Order N of the root of unity")
    free_params: int = Field(default=0, ge=0, description="Number m of transcendental parameters")
    q: List[QEntry] = Field(default_factory=list, description="Nonzero multiparameters, i < j")

    @model_validator(mode="after")
    def _check_entries(self):
        seen = set()
        for k, entry in enumerate(self.q):
            if not entry.i < entry.j <= self.rank:
                raise ValueError(f"q[{k}]: need 1 <= i < j <= rank, got i={entry.i}, j={entry.j}")
            if len(entry.free) != self.free_params:
                raise ValueError(f"q[{k}].free: expected {self.free_params} exponents, got {len(entry.free)}")
            if (entry.i, entry.j) in seen:
                raise ValueError(f"q[{k}]: duplicate entry for ({entry.i}, {entry.j})")
            seen.add((entry.i, entry.j))
        return self


class SublatticeFile(BaseModel):
    basis: List[List[int]] = Field(description="Generators of the sublattice as rows")


class CoefficientTerm(BaseModel):
    free_exponents: List[int] = Field(description="Exponents of t_1..t_m")
    cyclotomic: List[str] = Field(description="Rational coordinates in the basis 1, zeta, zeta^2, ...")

    @field_validator("cyclotomic")
    @classmethod
    def _check_rationals(cls, values: List[str]) -> List[str]:
        for k, text in enumerate(values):
            try:
                Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"entry {k}: {text!r} is not a rational \"p/q\"") from None
        return values


class ElementTerm(BaseModel):
    exponent: List[int] = Field(description="Exponent vector a of the monomial x^a")
    coeff: List[CoefficientTerm] = Field(description="Coefficient of x^a")


class ElementFile(BaseModel):
    terms: List[ElementTerm] = Field(default_factory=list, description="Normal-ordered terms")


class ActionEntry(BaseModel):
    j: int = Field(ge=1, description="Generator index (1-based, in split coordinates), r < j <= n")
    matrix: List[List[ElementFile]] = Field(description="d x d action matrix over F*C")
    inverse: Optional[List[List[ElementFile]]] = Field(
        default=None, description="Explicit inverse; computed from the determinant when omitted"
    )


class ModuleFile(BaseModel):
    split: List[List[int]] = Field(description="Unimodular basis of Z^n; the first r rows span C")
    r: int = Field(ge=0, description="Rank of C")
    d: int = Field(ge=0, description="Rank of the module as a free F*C-module")
    actions: List[ActionEntry] = Field(default_factory=list, description="One action per generator outside C")


class VectorFile(BaseModel):
    components: List[ElementFile] = Field(description="d components, each an element of F*C")


class CommEntry(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    central: List[int] = Field(description="Exponents of [h_i, h_j] in the basis of the center")


class DatumFile(BaseModel):
    n: int = Field(ge=1, description="Rank of H modulo its center")
    z: int = Field(ge=1, description="Rank of the center")
    comm: List[CommEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_comm(self):
        for k, entry in enumerate(self.comm):
            if not entry.i < entry.j <= self.n:
                raise ValueError(f"comm[{k}]: need 1 <= i < j <= n, got i={entry.i}, j={entry.j}")
            if len(entry.central) != self.z:
                raise ValueError(f"comm[{k}].central: expected {self.z} exponents")
        return self


class GammaModel(BaseModel):
    tors: int = 0
    free: List[int] = Field(default_factory=list)


class CharacterFile(BaseModel):
    images: List[GammaModel] = Field(description="Image of each central generator")
    torsion_order: int = Field(default=1, ge=1)
    free_params: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_images(self):
        for k, image in enumerate(self.images):
            if len(image.free) != self.free_params:
                raise ValueError(f"images[{k}].free: expected {self.free_params} exponents")
        return self


class GeneratorPair(BaseModel):
    a: List[int] = Field(description="Image in A = H / center")
    u: List[int] = Field(default_factory=list, description="Central part")


class GeneratorsFile(BaseModel):
    generators: List[GeneratorPair]


class Bounds(BaseModel):
    k_max: int = Field(default_factory=lambda: config.K_MAX, ge=0)
    deg_bound: int = Field(default_factory=lambda: config.DEG_BOUND, ge=1)
    s_max: int = Field(default_factory=lambda: config.S_MAX, ge=1)
    search_bound: int = Field(default_factory=lambda: config.SEARCH_BOUND, ge=1)


class NilpotentScenario(BaseModel):
    datum: DatumFile
    character: CharacterFile
    generators: List[GeneratorPair] = Field(description="Generators of the abelian subgroup L")


class ScenarioFile(BaseModel):
    """Bundle consumed by verify-all and theorem-b"""
    name: str = Field(default="scenario")
    spec: Optional[SpecFile] = Field(default=None, description="Algebra under test")
    subgroup: Optional[List[List[int]]] = Field(default=None, description="Commutative C; defaults to a maximal witness")
    probe_vector: Optional[VectorFile] = Field(default=None, description="Probe vector for cyclicity checks")
    bounds: Bounds = Field(default_factory=Bounds)
    nilpotent: Optional[NilpotentScenario] = Field(default=None)

    @model_validator(mode="after")
    def _require_content(self):
        if self.spec is None and self.nilpotent is None:
            raise ValueError("scenario needs a 'spec' or a 'nilpotent' section")
        return self
