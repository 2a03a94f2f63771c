"""
C-finite modules: semilinear actions, induction and probes
"""
from src.modules.c_finite import (
    CFiniteModule,
    ModuleSum,
    act,
    change_of_basis,
    check_consistency,
    direct_sum,
    external_sum,
)
from src.modules.exterior import exterior_top
from src.modules.induction import clock_shift_module, induce_cyclic
from src.modules.probes import dimension_probe, low_dimension_report, torsion_search
from src.modules.window import TruncationWindow, cyclicity_probe, gk_growth_estimate, growth_degree, require_degree

__all__ = [
    "CFiniteModule",
    "ModuleSum",
    "TruncationWindow",
    "act",
    "change_of_basis",
    "check_consistency",
    "clock_shift_module",
    "cyclicity_probe",
    "dimension_probe",
    "direct_sum",
    "exterior_top",
    "external_sum",
    "gk_growth_estimate",
    "growth_degree",
    "induce_cyclic",
    "low_dimension_report",
    "require_degree",
    "torsion_search",
]
