"""
Reduced-module harness for class-2 nilpotent groups

Reduces (H, chi) to a quantum torus, builds a module over it, and checks
torsion-freeness over the image of the abelian subgroup L. Growth and
finite-length evidence are only asserted when the reduced algebra has
trivial center.
"""
import logging
from typing import Any, Dict, List, Literal, Optional, Sequence, TypedDict

from langgraph.graph import END, StateGraph

from src.algebra import AlgebraSpec, has_trivial_center, is_commutative_sublattice
from src.commutative import holonomic_certificate, solution_lattice, virtual_complement
from src.lattice import Sublattice, saturation
from src.lattice.sublattice import is_saturated
from src.models.convert import spec_to_file
from src.models.reports import CheckResult, TheoremBReport
from src.models.schemas import Bounds
from src.modules import CFiniteModule, cyclicity_probe, gk_growth_estimate, induce_cyclic, torsion_search
from src.nilpotent import CentralCharacter, Class2Datum, is_abelian, reduce, subgroup_image
from src.utils.errors import QTorusError

logger = logging.getLogger(__name__)


class HarnessState(TypedDict):
    """State for the reduced-module graph"""
    # Input
    datum: Class2Datum
    character: CentralCharacter
    generators: List[Any]
    bounds: Bounds
    module: Optional[CFiniteModule]

    # Output
    spec: Optional[AlgebraSpec]
    subgroup: Optional[Sublattice]
    hypothesis_met: bool
    flags: List[str]
    checks: List[CheckResult]
    raw: Dict[str, Any]
    gk_degree: Optional[int]


def weight_module(spec: AlgebraSpec, lattice: Sublattice, s_max: Optional[int] = None) -> CFiniteModule:
    """induce_cyclic on a virtual complement of C with the trivial character"""
    solution = virtual_complement(spec, lattice, s_max)
    return induce_cyclic(spec, lattice, solution_lattice(solution, spec.rank))


class TheoremBHarness:
    """
    LangGraph pipeline: validate -> module -> torsion -> hypothesis, then
    growth and (for cyclic center) finite-length evidence when the
    hypothesis holds
    """

    def __init__(self):
        self.graph = self._build_graph()

    def _build_graph(self) -> StateGraph:
        workflow = StateGraph(HarnessState)

        workflow.add_node("validate", self._validate_node)
        workflow.add_node("build_module", self._build_module_node)
        workflow.add_node("torsion", self._torsion_node)
        workflow.add_node("hypothesis", self._hypothesis_node)
        workflow.add_node("growth", self._growth_node)
        workflow.add_node("finite_length", self._finite_length_node)

        workflow.set_entry_point("validate")
        workflow.add_edge("validate", "build_module")
        workflow.add_edge("build_module", "torsion")
        workflow.add_edge("torsion", "hypothesis")

        workflow.add_conditional_edges(
            "hypothesis",
            self._route_after_hypothesis,
            {
                "met": "growth",
                "not_met": END,
            }
        )
        workflow.add_conditional_edges(
            "growth",
            self._route_after_growth,
            {
                "cyclic_center": "finite_length",
                "done": END,
            }
        )
        workflow.add_edge("finite_length", END)

        return workflow.compile()

    def _validate_node(self, state: HarnessState) -> HarnessState:
        """Node: L abelian, reduce, image C commutative"""
        datum, generators = state["datum"], state["generators"]
        if not is_abelian(datum, generators):
            raise QTorusError("L is not abelian")
        spec = reduce(datum, state["character"])
        lattice = subgroup_image(datum, generators)
        commutative = is_commutative_sublattice(spec, lattice)
        state["spec"] = spec
        state["subgroup"] = lattice
        state["checks"] = state["checks"] + [
            CheckResult(name="image of L is commutative", status="pass" if commutative else "fail")
        ]
        state["raw"]["subgroup"] = [list(row) for row in lattice.rows]
        logger.info("reduced to rank %d, C of rank %d", spec.rank, lattice.rank)
        return state

    def _build_module_node(self, state: HarnessState) -> HarnessState:
        """Node: module over the reduced algebra, the weight module by default"""
        spec, lattice = state["spec"], state["subgroup"]
        if state["module"] is None:
            if not is_saturated(lattice):
                saturated = saturation(lattice)
                if not is_commutative_sublattice(spec, saturated):
                    raise QTorusError("C has torsion quotient and its saturation is not commutative")
                state["flags"] = state["flags"] + ["C replaced by its saturation"]
                lattice = saturated
                state["subgroup"] = lattice
            state["module"] = weight_module(spec, lattice, state["bounds"].s_max)
        module = state["module"]
        state["raw"]["module"] = {"split": [list(row) for row in module.split], "r": module.r, "d": module.d}
        return state

    def _torsion_node(self, state: HarnessState) -> HarnessState:
        """Node: no annihilator over F*C for any free generator"""
        module, lattice, bound = state["module"], state["subgroup"], state["bounds"].deg_bound
        results = [torsion_search(module, lattice, g, bound) for g in module.free_generators()]
        found = [k + 1 for k, report in enumerate(results) if report.found]
        state["checks"] = state["checks"] + [
            CheckResult(
                name="torsion-free over C",
                status="fail" if found else "pass",
                detail={"bound": bound, "torsion_generators": found},
            )
        ]
        state["raw"]["torsion"] = [report.model_dump() for report in results]
        return state

    def _hypothesis_node(self, state: HarnessState) -> HarnessState:
        """Node: trivial center of the reduced algebra"""
        met = has_trivial_center(state["spec"])
        state["hypothesis_met"] = met
        if not met:
            state["flags"] = state["flags"] + ["hypothesis not met: center nontrivial"]
            state["checks"] = state["checks"] + [
                CheckResult(name="trivial center", status="hypothesis not met")
            ]
        else:
            state["checks"] = state["checks"] + [CheckResult(name="trivial center", status="pass")]
        return state

    def _growth_node(self, state: HarnessState) -> HarnessState:
        """Node: growth degree equals rank C"""
        module, lattice = state["module"], state["subgroup"]
        growth = gk_growth_estimate(module, None, state["bounds"].k_max)
        state["gk_degree"] = growth.degree
        state["checks"] = state["checks"] + [
            CheckResult(
                name="growth degree equals rank C",
                status="pass" if growth.degree == lattice.rank else "fail",
                detail={"degree": growth.degree, "rank_C": lattice.rank, "dims": growth.dims},
            )
        ]
        state["raw"]["growth"] = growth.model_dump()
        return state

    def _finite_length_node(self, state: HarnessState) -> HarnessState:
        """Node: finite-length certificate plus cyclicity evidence"""
        module, spec = state["module"], state["spec"]
        gk = state["gk_degree"]
        certificate = holonomic_certificate(spec, gk if gk is not None else -1, state["bounds"].search_bound)
        cyclic = cyclicity_probe(module, module.free_generators()[0], min(state["bounds"].k_max, 4))
        ok = certificate.certified and cyclic.generates_interior_window
        state["checks"] = state["checks"] + [
            CheckResult(
                name="finite length evidence",
                status="pass" if ok else "fail",
                detail={"verdict": certificate.verdict, "cyclic": cyclic.generates_interior_window},
            )
        ]
        state["raw"]["certificate"] = certificate.model_dump()
        state["raw"]["cyclicity"] = cyclic.model_dump()
        return state

    def _route_after_hypothesis(self, state: HarnessState) -> Literal["met", "not_met"]:
        return "met" if state["hypothesis_met"] else "not_met"

    def _route_after_growth(self, state: HarnessState) -> Literal["cyclic_center", "done"]:
        return "cyclic_center" if state["datum"].z == 1 else "done"

    def run(
        self,
        datum: Class2Datum,
        character: CentralCharacter,
        generators: Sequence[Any],
        bounds: Optional[Bounds] = None,
        module: Optional[CFiniteModule] = None,
    ) -> TheoremBReport:
        """
        Run the harness

        Args:
            datum: Class-2 group data
            character: Central character
            generators: Generators (a, u) of the abelian subgroup L
            bounds: Search and window bounds
            module: Module over the reduced spec; the weight module when omitted

        Returns:
            TheoremBReport
        """
        initial_state: HarnessState = {
            "datum": datum,
            "character": character,
            "generators": list(generators),
            "bounds": bounds or Bounds(),
            "module": module,
            "spec": None,
            "subgroup": None,
            "hypothesis_met": False,
            "flags": [],
            "checks": [],
            "raw": {},
            "gk_degree": None,
        }
        result = self.graph.invoke(initial_state)
        return TheoremBReport(
            hypothesis_met=result["hypothesis_met"],
            flags=result["flags"],
            reduced_spec=spec_to_file(result["spec"]).model_dump(),
            subgroup=[list(row) for row in result["subgroup"].rows],
            checks=result["checks"],
            raw=result["raw"],
        )


def theorem_b_harness(
    datum: Class2Datum,
    character: CentralCharacter,
    generators: Sequence[Any],
    bounds: Optional[Bounds] = None,
    module: Optional[CFiniteModule] = None,
) -> TheoremBReport:
    return TheoremBHarness().run(datum, character, generators, bounds, module)
