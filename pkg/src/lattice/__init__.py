"""
Exact integer lattice algebra
"""
from src.lattice.normal_forms import (
    SmithDecomposition,
    determinant,
    hermite_normal_form,
    int_matrix,
    is_hermite_normal_form,
    is_unimodular,
    smith_normal_form,
    unimodular_inverse,
)
from src.lattice.sublattice import (
    Sublattice,
    complete_basis,
    contains,
    coordinates,
    finite_index_adjust,
    kernel_integer,
    kernel_mixed,
    lattice_index,
    lattice_intersection,
    lattice_sum,
    quotient_is_torsion_free,
    saturation,
)

__all__ = [
    "SmithDecomposition",
    "Sublattice",
    "complete_basis",
    "contains",
    "coordinates",
    "determinant",
    "finite_index_adjust",
    "hermite_normal_form",
    "int_matrix",
    "is_hermite_normal_form",
    "is_unimodular",
    "kernel_integer",
    "kernel_mixed",
    "lattice_index",
    "lattice_intersection",
    "lattice_sum",
    "quotient_is_torsion_free",
    "saturation",
    "smith_normal_form",
    "unimodular_inverse",
]
