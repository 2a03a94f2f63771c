"""
Value group, exact coefficients and fraction-free elimination
"""
from src.scalars.coefficient import (
    Coefficient,
    coeff_add,
    coeff_div_unit,
    coeff_eq,
    coeff_exact_div,
    coeff_inverse_unit,
    coeff_mul,
    coefficient_from_terms,
    embed_unit,
)
from src.scalars.cyclotomic import CyclotomicField, CyclotomicNumber, cyclotomic_field
from src.scalars.elimination import EchelonBasis, field_rank, fraction_free_rank
from src.scalars.gamma import GammaElement, gamma_add, gamma_is_zero, gamma_neg, gamma_scale

__all__ = [
    "Coefficient",
    "CyclotomicField",
    "CyclotomicNumber",
    "EchelonBasis",
    "GammaElement",
    "coeff_add",
    "coeff_div_unit",
    "coeff_eq",
    "coeff_exact_div",
    "coeff_inverse_unit",
    "coeff_mul",
    "coefficient_from_terms",
    "cyclotomic_field",
    "embed_unit",
    "field_rank",
    "fraction_free_rank",
    "gamma_add",
    "gamma_is_zero",
    "gamma_neg",
    "gamma_scale",
]
