"""
Class-2 nilpotent group data and its reduction to quantum tori
"""
from src.nilpotent.class2 import (
    CentralCharacter,
    Class2Datum,
    group_commutator,
    h_inverse,
    h_multiply,
    is_abelian,
    reduce,
    subgroup_image,
)

__all__ = [
    "CentralCharacter",
    "Class2Datum",
    "group_commutator",
    "h_inverse",
    "h_multiply",
    "is_abelian",
    "reduce",
    "subgroup_image",
]
