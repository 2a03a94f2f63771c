"""
C-finite modules: actions, consistency, induction, exterior power and probes
"""
from itertools import combinations

import pytest

from src.algebra import AlgebraSpec, TorusElement, has_trivial_center
from src.harness import weight_module
from src.lattice import Sublattice
from src.models.reports import GrowthReport
from src.models.schemas import Bounds
from src.modules import (
    CFiniteModule,
    TruncationWindow,
    change_of_basis,
    check_consistency,
    clock_shift_module,
    cyclicity_probe,
    dimension_probe,
    direct_sum,
    exterior_top,
    external_sum,
    gk_growth_estimate,
    growth_degree,
    induce_cyclic,
    low_dimension_report,
    require_degree,
    torsion_search,
)
from src.scalars import Coefficient
from src.utils.errors import GrowthUnstableError, ModuleStructureError, QTorusError, SpecMismatchError

from tests.conftest import free


def span(*rows):
    return Sublattice.from_generators(rows, len(rows[0]))


@pytest.fixture
def plane_module(plane, axis_1):
    return weight_module(plane, axis_1)


@pytest.fixture
def cyclotomic_module(cyclotomic_plane, axis_1):
    return weight_module(cyclotomic_plane, axis_1)


# ============================================================================
# CONSTRUCTION AND CONSISTENCY
# ============================================================================

def test_weight_module_shape(plane_module):
    assert plane_module.r == 1
    assert plane_module.d == 1
    assert plane_module.actions[0] == ((TorusElement.one(plane_module.local),),)
    assert check_consistency(plane_module).passed


def test_inverse_action_undoes_action(plane, axis_1):
    module = induce_cyclic(plane, axis_1, span((0, 2)))
    v = module.free_generators()[1]
    assert module.act_generator(1, module.act_generator(1, v, 1), -1) == v
    assert module.act_generator(1, module.act_generator(1, v, -2), 2) == v


def test_index_two_induced_module(plane, axis_1):
    """E = 2Z e_2 gives a rank 2 module over F*C"""
    module = induce_cyclic(plane, axis_1, span((0, 2)))
    assert module.d == 2
    assert check_consistency(module).passed
    report = gk_growth_estimate(module, k_max=4)
    assert report.dims == [2 * (2 * k + 1) for k in range(5)]
    assert report.degree == 1


def test_induce_rejects_bad_complement(plane, axis_1):
    with pytest.raises(ModuleStructureError):
        induce_cyclic(plane, axis_1, axis_1)


def test_inconsistent_module_reports_pair(complement_spec):
    """Trivial actions cannot satisfy y_2 y_3 = t y_3 y_2"""
    identity = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    module = CFiniteModule.build(complement_spec, identity, 1, [[[TorusElement.one(complement_spec)]]] * 2)
    report = check_consistency(module)
    assert not report.passed
    assert report.failing_pairs == [[2, 3]]


def test_build_rejects_wrong_action_count(plane):
    with pytest.raises(ModuleStructureError):
        CFiniteModule.build(plane, [(1, 0), (0, 1)], 1, [])


def test_build_rejects_non_unit_action(plane):
    zero = TorusElement.zero(plane)
    with pytest.raises(QTorusError):
        CFiniteModule.build(plane, [(1, 0), (0, 1)], 1, [[[zero]]])


def test_direct_sum(plane_module, cyclotomic_module):
    doubled = direct_sum(plane_module, plane_module)
    assert doubled.d == 2
    assert check_consistency(doubled).passed
    with pytest.raises(SpecMismatchError):
        direct_sum(plane_module, cyclotomic_module)


def test_change_of_basis_keeps_consistency(plane_module):
    doubled = direct_sum(plane_module, plane_module)
    one, zero = TorusElement.one(doubled.local), TorusElement.zero(doubled.local)
    y1 = doubled.c_monomial((1,))
    changed = change_of_basis(doubled, [[one, y1], [zero, one]])
    assert check_consistency(changed).passed
    assert gk_growth_estimate(changed, k_max=4).degree == 1


def test_clock_shift_module(cyclotomic_plane):
    module = clock_shift_module(cyclotomic_plane)
    assert module.d == 3
    assert check_consistency(module).passed
    assert exterior_top(module).passed
    report = gk_growth_estimate(module, k_max=3)
    assert report.dims == [3, 3, 3, 3]
    assert report.degree == 0


def test_clock_shift_needs_root_of_unity(plane):
    with pytest.raises(SpecMismatchError):
        clock_shift_module(plane)


def test_exterior_power_of_weight_module(plane_module):
    report = exterior_top(plane_module)
    assert report.passed
    assert report.exponent == 1
    assert report.power_module_consistent


def test_exterior_power_of_rank_two_module(plane, axis_1):
    module = induce_cyclic(plane, axis_1, span((0, 2)), [Coefficient.monomial(1, (1,))])
    assert module.d == 2
    report = exterior_top(module)
    assert report.passed
    assert report.exponent == 2
    assert report.power_module_consistent


# ============================================================================
# GROWTH AND WINDOWS
# ============================================================================

def test_weight_module_growth(plane_module):
    report = gk_growth_estimate(plane_module, k_max=5)
    assert report.dims == [2 * k + 1 for k in range(6)]
    assert report.degree == 1
    assert report.stable
    assert require_degree(report) == 1


@pytest.fixture
def hyperbolic_pairs() -> AlgebraSpec:
    """g_12 = g_34 = t: trivial center, C = <e_1, e_3> commutative"""
    return AlgebraSpec.build(4, 1, 1, {(0, 1): free(1), (2, 3): free(1)})


@pytest.mark.parametrize("e_rows, d", [(((0, 1, 0, 0), (0, 0, 0, 1)), 1), (((0, 2, 0, 0), (0, 0, 0, 1)), 2)])
def test_growth_over_rank_two_c(hyperbolic_pairs, e_rows, d):
    assert has_trivial_center(hyperbolic_pairs)
    c = span((1, 0, 0, 0), (0, 0, 1, 0))
    module = induce_cyclic(hyperbolic_pairs, c, span(*e_rows))
    assert module.r == 2
    assert module.d == d
    assert check_consistency(module).passed
    report = gk_growth_estimate(module, k_max=4)
    assert report.dims == [d * (2 * k + 1) ** 2 for k in range(5)]
    assert report.degree == 2


def test_growth_degree_sequences():
    assert growth_degree([1, 3, 5, 7]) == 1
    assert growth_degree([3, 3, 3]) == 0
    assert growth_degree([1, 4, 9, 16, 25]) == 2
    assert growth_degree([1, 2]) is None
    assert growth_degree([0, 0, 0]) is None


def test_growth_estimate_rejects_bad_input(plane_module):
    with pytest.raises(QTorusError):
        gk_growth_estimate(plane_module, k_max=2)
    with pytest.raises(ModuleStructureError):
        gk_growth_estimate(plane_module, plane_module.zero_vector(), k_max=3)


def test_require_degree_unstable():
    with pytest.raises(GrowthUnstableError):
        require_degree(GrowthReport(stable=False, degree=None, dims=[1, 2, 4, 8], k_max=3))


def test_truncation_window():
    window = TruncationWindow(2, 1, 2)
    assert window.dimension == 10
    assert len(list(window.monomials())) == 10
    assert window.contains((0, (2,)))
    assert not window.contains((1, (3,)))
    with pytest.raises(ValueError):
        TruncationWindow(-1, 1, 1)


# ============================================================================
# TORSION AND DIMENSION
# ============================================================================

def test_torsion_search(plane_module, axis_1):
    g = plane_module.free_generators()[0]
    assert not torsion_search(plane_module, axis_1, g, 3).found
    report = torsion_search(plane_module, span((0, 1)), g, 3)
    assert report.found
    assert report.verified
    assert report.annihilator is not None


def test_torsion_search_rejects_zero_vector(plane_module, axis_1):
    with pytest.raises(ModuleStructureError):
        torsion_search(plane_module, axis_1, plane_module.zero_vector())


def test_dimension_probe(plane_module):
    report = dimension_probe(plane_module, k_max=4)
    assert report.dimension == 1
    assert report.gk_degree == 1
    assert report.agrees_with_growth


def plane_family(plane, axis_1):
    """Induced modules over C = Z e_1 sharing the identity split"""
    characters = [Coefficient.monomial(1, (k,)) for k in (0, 1, -1, 2, -2)]
    return [
        induce_cyclic(plane, axis_1, span(e), [chi])
        for e in ((0, 1), (0, 2))
        for chi in characters
    ]


def test_dimension_matches_growth_on_constructed_modules(plane, axis_1):
    for module in plane_family(plane, axis_1):
        report = dimension_probe(module, k_max=4)
        assert report.dimension == 1
        assert report.agrees_with_growth


def test_dimension_of_direct_sums_is_the_max(plane, axis_1):
    modules = plane_family(plane, axis_1)
    dims = [dimension_probe(m).dimension for m in modules]
    pairs = list(combinations(range(len(modules)), 2))[:24]
    assert len(pairs) >= 20
    for i, j in pairs:
        total = direct_sum(modules[i], modules[j])
        assert total.d == modules[i].d + modules[j].d
        assert dimension_probe(total).dimension == max(dims[i], dims[j])


def test_module_sum(cyclotomic_module, cyclotomic_plane):
    """A rank-one weight module plus a finite-dimensional summand"""
    total = external_sum([cyclotomic_module, clock_shift_module(cyclotomic_plane)])
    assert total.d == 4
    assert gk_growth_estimate(total, k_max=4).degree == 1
    assert dimension_probe(total).dimension == 1


def test_external_sum_needs_modules():
    with pytest.raises(ModuleStructureError):
        external_sum([])


# ============================================================================
# CYCLICITY
# ============================================================================

def test_cyclicity_fills_interior(plane_module):
    """1 + y_1 generates because x_2 twists y_1 by a power of t"""
    one = TorusElement.one(plane_module.local)
    v = plane_module.vector([one + plane_module.c_monomial((1,))])
    report = cyclicity_probe(plane_module, v, 4)
    assert report.interior_dim == 9
    assert report.generates_interior_window


def test_cyclicity_negative_control(cyclotomic_module):
    """y_1^3 - 1 is fixed by x_2 when the twist is a cube root of unity"""
    one = TorusElement.one(cyclotomic_module.local)
    v = cyclotomic_module.vector([cyclotomic_module.c_monomial((3,)) - one])
    report = cyclicity_probe(cyclotomic_module, v, 4)
    assert report.interior_attained == 0
    assert not report.generates_interior_window


def test_low_dimension_report(plane_module, cyclotomic_module):
    assert low_dimension_report(plane_module, bounds=Bounds(k_max=4)).verdict == "artinian and cyclic (evidence)"
    assert low_dimension_report(cyclotomic_module, bounds=Bounds(k_max=4)).verdict == "hypothesis not met"
