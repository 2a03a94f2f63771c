"""
Quantum tori F*A: specs, elements and structure
"""
from src.algebra.element import (
    TorusElement,
    group_commutator,
    ordered_power_defect,
    is_unit,
    multiply,
    rebase_element,
    twist,
    unit_inverse,
)
from src.algebra.spec import (
    AlgebraSpec,
    beta,
    cocycle,
    commutator_units,
    power_cocycle_spec,
    rebase,
    sub_spec,
)
from src.algebra.structure import (
    center_lattice,
    commutativity_failures,
    finite_index_commutative_core,
    has_trivial_center,
    is_commutative_sublattice,
)

__all__ = [
    "AlgebraSpec",
    "TorusElement",
    "beta",
    "center_lattice",
    "cocycle",
    "commutativity_failures",
    "commutator_units",
    "finite_index_commutative_core",
    "group_commutator",
    "has_trivial_center",
    "is_commutative_sublattice",
    "is_unit",
    "multiply",
    "ordered_power_defect",
    "power_cocycle_spec",
    "rebase",
    "rebase_element",
    "sub_spec",
    "twist",
    "unit_inverse",
]
