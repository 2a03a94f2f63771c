"""
Top exterior power of a C-finite module

det is multiplicative and commutes with the twists, so taking determinants
of the consistency relation gives

    det A_i tau_i(det A_j) = beta(e_i, e_j)^d det A_j tau_j(det A_i),

i.e. the determinants act on the rank-1 module top-wedge(M) over the spec
whose multiparameters outside C are raised to the d-th power.
"""
import logging

from src.algebra import TorusElement, beta, power_cocycle_spec, twist
from src.modules.c_finite import CFiniteModule, check_consistency
from src.modules.matrices import determinant
from src.models.convert import element_to_file
from src.models.reports import ExteriorReport
from src.utils.errors import NotInvertibleError

logger = logging.getLogger(__name__)


def exterior_top(module: CFiniteModule) -> ExteriorReport:
    local, n, r, d = module.local, module.rank, module.r, module.d
    dets = {j: determinant(local, module.action(j)) for j in range(r, n)}

    failing = []
    for i in range(r, n):
        for j in range(i + 1, n):
            e_i = tuple(int(k == i) for k in range(n))
            e_j = tuple(int(k == j) for k in range(n))
            lhs = dets[i] * twist(local, e_i, dets[j])
            rhs = (dets[j] * twist(local, e_j, dets[i])).scale(local.embed(d * beta(local, e_i, e_j)))
            if lhs != rhs:
                failing.append([i + 1, j + 1])

    if d == 0:
        power_ok = True
    else:
        power = power_cocycle_spec(local, r, d)
        identity = [tuple(int(k == l) for l in range(n)) for k in range(n)]
        try:
            line = CFiniteModule.build(
                power,
                identity,
                r,
                [[[TorusElement.build(power, dets[j].terms)]] for j in range(r, n)],
                d=1,
            )
            power_ok = check_consistency(line).passed
        except NotInvertibleError:
            power_ok = False
    logger.debug("top exterior power: %d failing pairs, power module consistent: %s", len(failing), power_ok)

    return ExteriorReport(
        passed=not failing and power_ok,
        exponent=d,
        determinants={str(j + 1): element_to_file(det) for j, det in dets.items()},
        failing_pairs=failing,
        power_module_consistent=power_ok,
    )
