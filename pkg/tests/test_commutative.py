"""
Commutative sublattices, virtual complements and the finite-length certificate
"""
import json
from itertools import product

import pytest

from src.algebra import AlgebraSpec, is_commutative_sublattice
from src.commutative import (
    complement_solver,
    holonomic_certificate,
    max_commutative_rank,
    maximal_isotropic,
    solution_lattice,
    verify_virtual_complement,
    virtual_complement,
    witness_lattice,
)
from src.harness.checks import complement_closed_loop
from src.lattice import Sublattice
from src.scalars import GammaElement
from src.utils.errors import ComplementNotFoundError, LatticeError, QTorusError
from src.utils.sampling import random_spec, random_vector

from tests.conftest import free


def span(*rows, n=None):
    return Sublattice.from_generators(rows, n if n is not None else len(rows[0]))


# ============================================================================
# MAXIMAL COMMUTATIVE RANK
# ============================================================================

def test_plane_rank_is_exact(plane):
    report = max_commutative_rank(plane)
    assert report.rank == 1
    assert report.exact
    assert report.upper_bound == 1
    assert is_commutative_sublattice(plane, witness_lattice(report, 2))


def test_two_hyperbolic_pairs():
    """g_12 = g_34 = t leaves a rank 2 commutative sublattice"""
    spec = AlgebraSpec.build(4, 1, 1, {(0, 1): free(1), (2, 3): free(1)})
    report = max_commutative_rank(spec)
    assert report.rank == 2
    assert report.exact
    assert is_commutative_sublattice(spec, witness_lattice(report, 4))


def test_commutative_algebra_has_full_rank():
    spec = AlgebraSpec.build(3, 1, 1, {})
    report = max_commutative_rank(spec)
    assert report.rank == 3
    assert report.exact


def test_cyclotomic_rank_is_heuristic(cyclotomic_plane):
    report = max_commutative_rank(cyclotomic_plane)
    assert report.rank == 2
    assert not report.exact
    assert report.nodes_visited > 0
    assert is_commutative_sublattice(cyclotomic_plane, witness_lattice(report, 2))


def test_maximal_isotropic_dimension():
    form = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    assert len(maximal_isotropic(form)) == 2
    assert len(maximal_isotropic([[0, 0], [0, 0]])) == 2


# ============================================================================
# VIRTUAL COMPLEMENTS
# ============================================================================

def test_complement_example_matches_golden(complement_spec, golden_dir):
    expected = json.loads((golden_dir / "complement_example.json").read_text())
    solution = complement_solver(complement_spec, span((1, 0, 0)))
    assert solution.s == expected["s"]
    assert solution.mu == expected["mu"]
    assert solution.E_basis == expected["E_basis"]


def test_plane_complement(plane, axis_1):
    solution = complement_solver(plane, axis_1)
    assert solution.s == 1
    assert solution.mu == [[0]]
    assert solution.E_basis == [[0, 1]]


def test_complement_requires_commutative_c(plane):
    with pytest.raises(QTorusError):
        complement_solver(plane, Sublattice.full(2))


def test_complement_requires_saturated_c(plane):
    with pytest.raises(LatticeError):
        complement_solver(plane, span((2, 0)))


def test_virtual_complement_through_adjustment(plane):
    """C = 2Z e_1 goes through the finite index adjustment"""
    c = span((2, 0))
    solution = virtual_complement(plane, c)
    assert solution.E_basis == [[0, 1]]
    report = verify_virtual_complement(plane, c, solution_lattice(solution, 2))
    assert report.passed
    assert report.index == 2


def test_verify_virtual_complement(plane, axis_1):
    good = verify_virtual_complement(plane, axis_1, span((0, 1)))
    assert good.passed
    assert good.index == 1
    assert good.intersection == []

    bad = verify_virtual_complement(plane, axis_1, axis_1)
    assert not bad.passed
    assert bad.index is None
    assert not bad.finite_index


def test_complement_not_found_with_small_s_max():
    """x_1 x_2 = zeta_5^2 x_2 x_1 over C = 0 needs s = 5"""
    spec = AlgebraSpec.build(2, 5, 0, {(0, 1): GammaElement(5, 2, ())})
    with pytest.raises(ComplementNotFoundError):
        complement_solver(spec, Sublattice.zero(2), s_max=2)
    assert complement_solver(spec, Sublattice.zero(2), s_max=5).s == 5


def test_complement_has_smallest_max_norm(complement_spec, rng):
    """
    Against every commuting choice of c in a box: no smaller max-norm exists,
    and ties go to the lexicographically largest c
    """
    specs = [complement_spec] + [random_spec(rng, 4, 1, 1) for _ in range(8)]
    for spec in specs:
        n = spec.rank
        c = span(tuple(int(i == 0) for i in range(n)))
        try:
            solution = complement_solver(spec, c)
        except ComplementNotFoundError:
            continue
        flat = tuple(x for row in solution.mu for x in row)
        bound = max((abs(x) for x in flat), default=0)
        found = []
        for cand in product(range(-bound, bound + 1), repeat=n - 1):
            rows = [
                tuple(solution.s * int(i == j) + cand[j - 1] * int(i == 0) for i in range(n))
                for j in range(1, n)
            ]
            if is_commutative_sublattice(spec, span(*rows)):
                found.append(cand)
        smallest = min(max((abs(x) for x in cand), default=0) for cand in found)
        assert smallest == bound
        assert flat == max(cand for cand in found if max((abs(x) for x in cand), default=0) == bound)


def test_complement_closed_loop(complement_spec, plane, axis_1):
    assert complement_closed_loop(complement_spec, span((1, 0, 0))).status == "pass"
    assert complement_closed_loop(plane, axis_1).status == "pass"


def random_line(rng, n):
    while True:
        v = random_vector(rng, n)
        if any(v):
            return Sublattice.from_generators([v], n)


def test_random_closed_loop(rng):
    """
    Rank 4 specs, three kinds in turn: generic with C a maximal commutative
    witness, generic with C a line, cyclotomic with C a line. A line leaves
    three complement generators, so every cross pair is constrained.
    """
    solved = 0
    for trial in range(150):
        kind = trial % 3
        if kind == 2:
            spec = random_spec(rng, 4, 3, 0)
        else:
            spec = random_spec(rng, 4, 1, 1)
        if kind == 0:
            c = witness_lattice(max_commutative_rank(spec), 4)
        else:
            c = random_line(rng, 4)
        result = complement_closed_loop(spec, c)
        if "error" in result.detail:
            continue
        assert result.status == "pass", result.detail
        assert len(result.detail["E_basis"]) == 4 - c.rank
        solved += 1
    assert solved >= 50


# ============================================================================
# FINITE LENGTH CERTIFICATE
# ============================================================================

def test_certificate_balanced(plane):
    cert = holonomic_certificate(plane, 1)
    assert cert.certified
    assert cert.verdict == "finite length"


def test_certificate_unbalanced(plane):
    cert = holonomic_certificate(plane, 0)
    assert not cert.certified
    assert cert.verdict == "not certified"


def test_certificate_inconclusive_on_heuristic_rank(cyclotomic_plane):
    cert = holonomic_certificate(cyclotomic_plane, 0)
    assert cert.verdict == "inconclusive (heuristic rank)"
    assert not cert.exact_rank
