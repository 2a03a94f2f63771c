"""
One-shot acceptance runner over a scenario file
"""
import logging
from typing import Any, List, Literal, Optional, TypedDict

from langgraph.graph import END, StateGraph

from src.algebra import AlgebraSpec, has_trivial_center, is_commutative_sublattice
from src.commutative import holonomic_certificate, max_commutative_rank, witness_lattice
from src.harness.checks import (
    center_oracle,
    cocycle_identity,
    complement_closed_loop,
    defining_relations,
    finite_index_adjust_suite,
)
from src.harness.theorem_b import TheoremBHarness, weight_module
from src.lattice import Sublattice
from src.models.convert import spec_from_file, sublattice_from_file
from src.models.loaders import character_from_file, datum_from_file, generators_from_file, vector_from_file
from src.models.reports import AcceptanceMatrix, CheckResult
from src.models.schemas import Bounds, ScenarioFile
from src.modules import (
    CFiniteModule,
    check_consistency,
    cyclicity_probe,
    dimension_probe,
    exterior_top,
    gk_growth_estimate,
    torsion_search,
)
from src.nilpotent import reduce
from src.utils import config, get_rng
from src.utils.errors import QTorusError

logger = logging.getLogger(__name__)

SAMPLED_TRIALS = 50


class AcceptanceState(TypedDict):
    """State for the acceptance graph"""
    # Input
    scenario: ScenarioFile
    seed: int

    # Working data
    spec: Optional[AlgebraSpec]
    subgroup: Optional[Sublattice]
    bounds: Bounds
    module: Optional[CFiniteModule]
    hypothesis_met: bool
    gk_degree: Optional[int]

    # Output
    checks: List[CheckResult]


def _check(name: str, ok: bool, **detail: Any) -> CheckResult:
    return CheckResult(name=name, status="pass" if ok else "fail", detail=detail)


class AcceptanceRunner:
    """
    LangGraph pipeline: load -> algebra -> commutative -> modules ->
    cyclicity or negative control -> nilpotent bridge
    """

    def __init__(self):
        self.graph = self._build_graph()

    def _build_graph(self) -> StateGraph:
        workflow = StateGraph(AcceptanceState)

        workflow.add_node("load", self._load_node)
        workflow.add_node("algebra", self._algebra_node)
        workflow.add_node("commutative", self._commutative_node)
        workflow.add_node("modules", self._modules_node)
        workflow.add_node("cyclicity", self._cyclicity_node)
        workflow.add_node("negative_control", self._negative_control_node)
        workflow.add_node("nilpotent", self._nilpotent_node)

        workflow.set_entry_point("load")
        workflow.add_edge("load", "algebra")
        workflow.add_edge("algebra", "commutative")

        workflow.add_conditional_edges(
            "commutative",
            self._route_after_commutative,
            {
                "modules": "modules",
                "nilpotent": "nilpotent",
                "done": END,
            }
        )
        workflow.add_conditional_edges(
            "modules",
            self._route_after_modules,
            {
                "cyclicity": "cyclicity",
                "negative_control": "negative_control",
            }
        )
        for node in ("cyclicity", "negative_control"):
            workflow.add_conditional_edges(
                node,
                self._route_to_nilpotent,
                {
                    "nilpotent": "nilpotent",
                    "done": END,
                }
            )
        workflow.add_edge("nilpotent", END)

        return workflow.compile()

    def _load_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: resolve the spec (directly or by reduction) and C"""
        scenario = state["scenario"]
        if scenario.spec is not None:
            spec = spec_from_file(scenario.spec)
        else:
            nil = scenario.nilpotent
            spec = reduce(datum_from_file(nil.datum), character_from_file(nil.character))
        if scenario.subgroup is not None:
            subgroup = sublattice_from_file(scenario.subgroup, spec.rank)
        else:
            subgroup = witness_lattice(max_commutative_rank(spec, scenario.bounds.search_bound), spec.rank)
        state["spec"] = spec
        state["subgroup"] = subgroup
        state["bounds"] = scenario.bounds
        logger.info("scenario %s: rank %d, C of rank %d", scenario.name, spec.rank, subgroup.rank)
        return state

    def _algebra_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: cocycle identity, defining relations, center oracle"""
        spec = state["spec"]
        rng = get_rng(state["seed"])
        trials = min(config.RANDOM_TRIALS, SAMPLED_TRIALS)
        checks = [
            cocycle_identity(spec, rng, trials),
            defining_relations(spec, rng, trials),
            center_oracle(spec, 4 if spec.rank <= 3 else 2),
        ]
        met = has_trivial_center(spec)
        state["hypothesis_met"] = met
        checks.append(CheckResult(name="trivial center", status="pass" if met else "hypothesis not met"))
        state["checks"] = state["checks"] + checks
        return state

    def _commutative_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: C commutative, maximal rank, complement closed loop, finite-index adjustment"""
        spec, lattice, bounds = state["spec"], state["subgroup"], state["bounds"]
        commutative = is_commutative_sublattice(spec, lattice)
        rank_report = max_commutative_rank(spec, bounds.search_bound)
        checks = [
            _check("subgroup commutative", commutative, basis=[list(row) for row in lattice.rows]),
            _check(
                "max commutative rank bounds C",
                rank_report.rank >= lattice.rank or not commutative,
                rank=rank_report.rank,
                exact=rank_report.exact,
            ),
            finite_index_adjust_suite(spec.rank, get_rng(state["seed"]), 20),
        ]
        if commutative:
            checks.append(complement_closed_loop(spec, lattice, bounds.s_max))
        state["checks"] = state["checks"] + checks
        return state

    def _modules_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: weight module consistency, determinants, torsion, growth, dimension"""
        spec, lattice, bounds = state["spec"], state["subgroup"], state["bounds"]
        try:
            module = weight_module(spec, lattice, bounds.s_max)
        except QTorusError as exc:
            state["checks"] = state["checks"] + [
                CheckResult(name="weight module", status="fail", detail={"error": str(exc)})
            ]
            state["module"] = None
            return state
        state["module"] = module

        consistency = check_consistency(module)
        exterior = exterior_top(module)
        torsion = [torsion_search(module, lattice, g, bounds.deg_bound) for g in module.free_generators()]
        growth = gk_growth_estimate(module, None, max(bounds.k_max, 3))
        dimension = dimension_probe(module, None, bounds.deg_bound)
        state["gk_degree"] = growth.degree
        certificate = holonomic_certificate(
            spec, growth.degree if growth.degree is not None else -1, bounds.search_bound
        )

        state["checks"] = state["checks"] + [
            _check("module consistency", consistency.passed, failing_pairs=consistency.failing_pairs),
            _check("top exterior power", exterior.passed, exponent=exterior.exponent),
            _check(
                "torsion-free over C",
                not any(report.found for report in torsion),
                bound=bounds.deg_bound,
            ),
            _check("growth degree equals rank C", growth.degree == lattice.rank, dims=growth.dims),
            _check(
                "dimension probe equals growth degree",
                dimension.dimension == growth.degree,
                dimension=dimension.dimension,
            ),
            CheckResult(
                name="finite length certificate",
                status="pass" if certificate.certified else "skipped",
                detail={"verdict": certificate.verdict},
            ),
        ]
        return state

    def _probe_vector(self, state: AcceptanceState):
        module = state["module"]
        probe = state["scenario"].probe_vector
        return module.free_generators()[0] if probe is None else vector_from_file(probe, module)

    def _cyclicity_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: interior-window saturation for k = 3, 4, 5"""
        module = state["module"]
        v = self._probe_vector(state)
        reports = [cyclicity_probe(module, v, k) for k in (3, 4, 5)]
        state["checks"] = state["checks"] + [
            _check(
                "cyclicity evidence",
                all(report.generates_interior_window for report in reports),
                ratios=[report.ratio for report in reports],
            )
        ]
        return state

    def _negative_control_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: record the probe without asserting cyclicity"""
        module = state["module"]
        report = cyclicity_probe(module, self._probe_vector(state), 3)
        state["checks"] = state["checks"] + [
            CheckResult(
                name="cyclicity evidence",
                status="hypothesis not met",
                detail={
                    "generates_interior_window": report.generates_interior_window,
                    "interior_attained": report.interior_attained,
                    "interior_dim": report.interior_dim,
                },
            )
        ]
        return state

    def _nilpotent_node(self, state: AcceptanceState) -> AcceptanceState:
        """Node: reduced-module harness on the scenario's group data"""
        nil = state["scenario"].nilpotent
        datum = datum_from_file(nil.datum)
        report = TheoremBHarness().run(
            datum,
            character_from_file(nil.character),
            generators_from_file(nil.generators, datum),
            state["bounds"],
        )
        state["checks"] = state["checks"] + [
            CheckResult(name=f"nilpotent: {check.name}", status=check.status, detail=check.detail)
            for check in report.checks
        ]
        return state

    def _route_after_commutative(self, state: AcceptanceState) -> Literal["modules", "nilpotent", "done"]:
        if is_commutative_sublattice(state["spec"], state["subgroup"]):
            return "modules"
        return "nilpotent" if state["scenario"].nilpotent is not None else "done"

    def _route_after_modules(self, state: AcceptanceState) -> Literal["cyclicity", "negative_control"]:
        if state["module"] is not None and state["hypothesis_met"]:
            return "cyclicity"
        return "negative_control"

    def _route_to_nilpotent(self, state: AcceptanceState) -> Literal["nilpotent", "done"]:
        return "nilpotent" if state["scenario"].nilpotent is not None else "done"

    def run(self, scenario: ScenarioFile, seed: Optional[int] = None) -> AcceptanceMatrix:
        initial_state: AcceptanceState = {
            "scenario": scenario,
            "seed": config.SEED if seed is None else seed,
            "spec": None,
            "subgroup": None,
            "bounds": scenario.bounds,
            "module": None,
            "hypothesis_met": False,
            "gk_degree": None,
            "checks": [],
        }
        result = self.graph.invoke(initial_state)
        checks = result["checks"]
        return AcceptanceMatrix(
            name=scenario.name,
            passed=all(check.status != "fail" for check in checks),
            checks=checks,
        )


def verify_all(scenario: ScenarioFile, seed: Optional[int] = None) -> AcceptanceMatrix:
    return AcceptanceRunner().run(scenario, seed)
