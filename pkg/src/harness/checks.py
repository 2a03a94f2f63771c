"""
Property checks shared by the acceptance runner and the test suite

Each check returns a CheckResult and never raises on a failed property.
"""
import logging
import random
from itertools import product
from typing import Optional

from src.algebra import AlgebraSpec, TorusElement, beta, center_lattice, cocycle, multiply
from src.commutative import solution_lattice, verify_virtual_complement, virtual_complement
from src.lattice import (
    Sublattice,
    finite_index_adjust,
    lattice_index,
    quotient_is_torsion_free,
)
from src.models.reports import CheckResult
from src.utils import config
from src.utils.errors import ComplementNotFoundError
from src.utils.sampling import random_sublattice, random_vector

logger = logging.getLogger(__name__)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def cocycle_identity(spec: AlgebraSpec, rng: random.Random, trials: Optional[int] = None) -> CheckResult:
    """lambda(a, b) + lambda(a + b, c) = lambda(b, c) + lambda(a, b + c)"""
    trials = trials or config.RANDOM_TRIALS
    n = spec.rank
    for _ in range(trials):
        a, b, c = (random_vector(rng, n, 3) for _ in range(3))
        ab = tuple(x + y for x, y in zip(a, b))
        bc = tuple(x + y for x, y in zip(b, c))
        if cocycle(spec, a, b) + cocycle(spec, ab, c) != cocycle(spec, b, c) + cocycle(spec, a, bc):
            return CheckResult(name="cocycle identity", status="fail", detail={"a": a, "b": b, "c": c})
    return CheckResult(name="cocycle identity", status="pass", detail={"trials": trials})


def defining_relations(spec: AlgebraSpec, rng: random.Random, trials: Optional[int] = None) -> CheckResult:
    """x^a x^b = beta(a, b) x^b x^a on random monomials"""
    trials = trials or config.RANDOM_TRIALS
    for _ in range(trials):
        a, b = random_vector(rng, spec.rank, 3), random_vector(rng, spec.rank, 3)
        xa, xb = TorusElement.monomial(spec, a), TorusElement.monomial(spec, b)
        if multiply(xa, xb) != multiply(xb, xa).scale(spec.embed(beta(spec, a, b))):
            return CheckResult(name="defining relations", status="fail", detail={"a": a, "b": b})
    return CheckResult(name="defining relations", status="pass", detail={"trials": trials})


def center_oracle(spec: AlgebraSpec, bound: int = 4) -> CheckResult:
    """Center membership agrees with the radical congruences on a box"""
    center = center_lattice(spec)
    n = spec.rank
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for v in product(range(-bound, bound + 1), repeat=n):
        in_radical = all(beta(spec, v, e).is_zero() for e in units)
        if (v in center) != in_radical:
            return CheckResult(name="center oracle", status="fail", detail={"vector": list(v)})
    return CheckResult(
        name="center oracle",
        status="pass",
        detail={"bound": bound, "center_basis": [list(row) for row in center.rows]},
    )


def adjust_postconditions(lattice: Sublattice) -> bool:
    """C <= A', [Z^n : A'] finite, A'/C torsion-free"""
    n = lattice.ambient_rank
    adjusted = finite_index_adjust(lattice, n)
    contained = all(row in adjusted for row in lattice.rows)
    finite = lattice_index(adjusted, Sublattice.full(n)) is not None
    return contained and finite and quotient_is_torsion_free(adjusted, lattice)


def finite_index_adjust_suite(n: int, rng: random.Random, trials: int = 100) -> CheckResult:
    for _ in range(trials):
        lattice = random_sublattice(rng, n)
        if not adjust_postconditions(lattice):
            return CheckResult(
                name="finite index adjust",
                status="fail",
                detail={"basis": [list(row) for row in lattice.rows]},
            )
    return CheckResult(name="finite index adjust", status="pass", detail={"trials": trials, "n": n})


def complement_closed_loop(spec: AlgebraSpec, lattice: Sublattice, s_max: Optional[int] = None) -> CheckResult:
    """The complement's generating monomials commute and E passes verification"""
    try:
        solution = virtual_complement(spec, lattice, s_max)
    except ComplementNotFoundError as exc:
        return CheckResult(name="complement closed loop", status="fail", detail={"error": str(exc)})
    units = [TorusElement.monomial(spec, e) for e in solution.E_basis]
    commuting = all(
        multiply(units[p], units[q]) == multiply(units[q], units[p])
        for p in range(len(units))
        for q in range(p + 1, len(units))
    )
    report = verify_virtual_complement(spec, lattice, solution_lattice(solution, spec.rank))
    return CheckResult(
        name="complement closed loop",
        status=_status(commuting and report.passed),
        detail={"s": solution.s, "mu": solution.mu, "E_basis": solution.E_basis, "index": report.index},
    )
