"""
Center, commutative subalgebras and related lattice-level structure
"""
import logging
from typing import List, Optional, Tuple

from src.algebra.spec import AlgebraSpec, beta, sub_spec
from src.lattice import Sublattice, kernel_mixed, lattice_index
from src.utils.errors import SpecMismatchError

logger = logging.getLogger(__name__)


def _form_rows(spec: AlgebraSpec):
    free_rows = [row for mat in spec.free_matrices for row in mat]
    tors_rows = spec.tors_matrix if spec.torsion_order > 1 else []
    return free_rows, tors_rows


def center_lattice(spec: AlgebraSpec) -> Sublattice:
    """
    Radical {a : beta(a, e_i) = 0 for all i}

    This is the support lattice of the center of F*A.
    """
    free_rows, tors_rows = _form_rows(spec)
    center = kernel_mixed(free_rows, tors_rows, spec.torsion_order, spec.rank)
    logger.debug("center of rank-%d spec has rank %d", spec.rank, center.rank)
    return center


def has_trivial_center(spec: AlgebraSpec) -> bool:
    return center_lattice(spec).rank == 0


def commutativity_failures(spec: AlgebraSpec, lattice: Sublattice) -> List[Tuple[int, int]]:
    """Basis pairs (k, l), k < l, with beta(b_k, b_l) != 0"""
    if lattice.ambient_rank != spec.rank:
        raise SpecMismatchError(f"sublattice lives in Z^{lattice.ambient_rank}, spec has rank {spec.rank}")
    rows = lattice.rows
    return [
        (k, l)
        for k in range(len(rows))
        for l in range(k + 1, len(rows))
        if not beta(spec, rows[k], rows[l]).is_zero()
    ]


def is_commutative_sublattice(spec: AlgebraSpec, lattice: Sublattice) -> bool:
    return not commutativity_failures(spec, lattice)


def finite_index_commutative_core(spec: AlgebraSpec, lattice: Sublattice) -> Optional[Sublattice]:
    """
    C0 = {c in C : beta(c, C) = 0}, when it has finite index in C

    Returns:
        C0, or None when the index is infinite or C is zero
    """
    if lattice.rank == 0:
        return None
    local = sub_spec(spec, lattice)
    radical = center_lattice(local)
    gens = [
        tuple(sum(y[k] * lattice.rows[k][i] for k in range(lattice.rank)) for i in range(spec.rank))
        for y in radical.rows
    ]
    core = Sublattice.from_generators(gens, spec.rank)
    if lattice_index(core, lattice) is None:
        return None
    return core
