"""
Commutative sublattices, virtual complements and the finite-length certificate
"""
from src.commutative.certificate import holonomic_certificate
from src.commutative.complement import (
    complement_solver,
    solution_lattice,
    verify_virtual_complement,
    virtual_complement,
)
from src.commutative.rank import max_commutative_rank, maximal_isotropic, witness_lattice

__all__ = [
    "complement_solver",
    "holonomic_certificate",
    "max_commutative_rank",
    "maximal_isotropic",
    "solution_lattice",
    "verify_virtual_complement",
    "virtual_complement",
    "witness_lattice",
]
