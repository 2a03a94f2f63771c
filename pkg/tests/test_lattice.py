"""
Integer lattice algebra: normal forms, kernels, sublattice operations
"""
import pytest

from src.harness.checks import adjust_postconditions, finite_index_adjust_suite
from src.lattice import (
    Sublattice,
    complete_basis,
    contains,
    coordinates,
    determinant,
    finite_index_adjust,
    hermite_normal_form,
    int_matrix,
    is_hermite_normal_form,
    is_unimodular,
    kernel_integer,
    kernel_mixed,
    lattice_index,
    lattice_intersection,
    lattice_sum,
    quotient_is_torsion_free,
    saturation,
    smith_normal_form,
    unimodular_inverse,
)
from src.lattice.normal_forms import identity, matrices_equal, to_rows
from src.lattice.sublattice import is_saturated
from src.utils.errors import LatticeError, NotUnimodularError
from src.utils.sampling import random_sublattice


def span(*rows, n=None):
    return Sublattice.from_generators(rows, n if n is not None else len(rows[0]))


# ============================================================================
# NORMAL FORMS
# ============================================================================

def test_hermite_normal_form_small():
    """Test HNF shape and transform on a 2x2 example"""
    m = int_matrix([[2, 4], [1, 3]])
    h, u = hermite_normal_form(m)
    assert to_rows(h) == ((1, 1), (0, 2))
    assert is_hermite_normal_form(h)
    assert is_unimodular(u)
    assert matrices_equal(u.dot(m), h)


def test_hermite_normal_form_random(rng):
    """Test that U @ M == H with H in HNF on random matrices"""
    for _ in range(30):
        m = int_matrix([[rng.randint(-5, 5) for _ in range(4)] for _ in range(3)])
        h, u = hermite_normal_form(m)
        assert is_hermite_normal_form(h)
        assert is_unimodular(u)
        assert matrices_equal(u.dot(m), h)


def test_smith_normal_form_invariants():
    """Test invariant factors and the transform identity"""
    m = int_matrix([[2, 4], [6, 8]])
    snf = smith_normal_form(m)
    assert snf.invariant_factors == (2, 4)
    assert matrices_equal(snf.U.dot(m).dot(snf.V), snf.D)
    assert is_unimodular(snf.U) and is_unimodular(snf.V)


def test_smith_divisibility_chain(rng):
    for _ in range(20):
        m = int_matrix([[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)])
        factors = smith_normal_form(m).invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert all(f > 0 for f in factors)


def test_determinant_and_inverse():
    assert determinant(int_matrix([[1, 2], [3, 4]])) == -2
    assert determinant(int_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])) == -1
    u = int_matrix([[2, 1], [1, 1]])
    assert matrices_equal(unimodular_inverse(u).dot(u), identity(2))


def test_unimodular_inverse_rejects_singular():
    with pytest.raises(NotUnimodularError):
        unimodular_inverse(int_matrix([[2, 0], [0, 1]]))


# ============================================================================
# KERNELS
# ============================================================================

def test_kernel_integer():
    """Test the kernel of s + c_2 - 2 c_3"""
    kernel = kernel_integer(int_matrix([[1, 1, -2]]))
    assert kernel.rank == 2
    assert (1, 1, 1) in kernel
    assert (0, 2, 1) in kernel
    assert (1, 0, 0) not in kernel


def test_kernel_integer_without_rows():
    assert kernel_integer(int_matrix([], 3), 3) == Sublattice.full(3)


def test_kernel_mixed_congruence():
    """x = 0 mod 3 is the lattice 3Z"""
    assert kernel_mixed([], [[1]], 3, 1).rows == ((3,),)


def test_kernel_mixed_free_and_torsion():
    """a_1 = 0 and a_2 = 0 mod 2"""
    result = kernel_mixed([[1, 0]], [[0, 1]], 2, 2)
    assert result.rows == ((0, 2),)


def test_kernel_mixed_rejects_bad_modulus():
    with pytest.raises(LatticeError):
        kernel_mixed([], [[1]], 0, 1)


# ============================================================================
# SUBLATTICES
# ============================================================================

def test_sublattice_is_canonical():
    assert span((2, 4), (1, 3)).rows == ((1, 1), (0, 2))
    assert span((1, 0), (2, 0), (0, 1)) == Sublattice.full(2)


def test_sublattice_rejects_wrong_length():
    with pytest.raises(LatticeError):
        Sublattice(ambient_rank=2, rows=((1, 0, 0),))


def test_coordinates_and_membership():
    lattice = span((1, 1), (0, 2))
    assert coordinates(lattice, (1, 3)) == (1, 1)
    assert contains(lattice, (2, 0))
    assert not contains(lattice, (1, 0))
    with pytest.raises(LatticeError):
        coordinates(lattice, (1, 0))


def test_saturation():
    assert saturation(span((2, 0))) == span((1, 0))
    assert saturation(span((2, 2), (0, 3))) == Sublattice.full(2)
    assert is_saturated(span((1, 1)))
    assert not is_saturated(span((2, 4)))


def test_complete_basis():
    completed = complete_basis(span((1, 1)))
    assert to_rows(completed) == ((1, 1), (0, 1))
    assert is_unimodular(completed)


def test_complete_basis_non_unit_pivot():
    """(2, 3) is primitive but its pivot is 2, so the SNF path is used"""
    lattice = span((2, 3))
    completed = complete_basis(lattice)
    assert to_rows(completed)[0] == (2, 3)
    assert is_unimodular(completed)


def test_complete_basis_requires_saturation():
    with pytest.raises(LatticeError):
        complete_basis(span((2, 0)))


def test_sum_intersection_index():
    a, b = span((2, 0)), span((3, 0))
    assert lattice_sum(a, b) == span((1, 0))
    assert lattice_intersection(a, b) == span((6, 0))
    assert lattice_index(span((2, 0), (0, 3)), Sublattice.full(2)) == 6
    assert lattice_index(span((1, 0)), Sublattice.full(2)) is None
    assert lattice_index(Sublattice.zero(2), Sublattice.zero(2)) == 1


def test_index_rejects_non_inclusion():
    with pytest.raises(LatticeError):
        lattice_index(span((1, 0)), span((2, 0)))


def test_ambient_mismatch():
    with pytest.raises(LatticeError):
        lattice_sum(span((1, 0)), span((1, 0, 0)))


def test_quotient_torsion():
    full = Sublattice.full(2)
    assert not quotient_is_torsion_free(full, span((2, 0)))
    assert quotient_is_torsion_free(full, span((1, 0)))
    assert quotient_is_torsion_free(full, Sublattice.zero(2))


def test_finite_index_adjust_example():
    """C = 2Z e_1 is adjusted to 2Z e_1 + Z e_2"""
    adjusted = finite_index_adjust(span((2, 0)), 2)
    assert adjusted == span((2, 0), (0, 1))
    assert lattice_index(adjusted, Sublattice.full(2)) == 2
    assert adjust_postconditions(span((2, 0)))


def test_finite_index_adjust_random(rng):
    """Postconditions hold on random sublattices of Z^3 and Z^4"""
    for n in (3, 4):
        for _ in range(40):
            assert adjust_postconditions(random_sublattice(rng, n))


def test_finite_index_adjust_suite(rng):
    assert finite_index_adjust_suite(3, rng, 30).status == "pass"
