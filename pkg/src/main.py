"""
qtorus command line

Usage:
    python -m src.main center spec.json
    python -m src.main complement --c-basis C.json --s-max 10 spec.json
    python -m src.main verify-all scenarios/generic_quantum_plane.json

Exit status: 0 when the computation succeeded and every asserted property
holds, 1 when a property failed, 2 on unreadable or malformed input.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from src.algebra import (
    AlgebraSpec,
    center_lattice,
    commutativity_failures,
    has_trivial_center,
    multiply,
)
from src.commutative import max_commutative_rank, virtual_complement, witness_lattice
from src.harness import theorem_b_harness, verify_all, weight_module
from src.lattice import Sublattice
from src.models.convert import element_from_file, element_to_file, spec_from_file, spec_to_file
from src.models.loaders import (
    character_from_file,
    datum_from_file,
    generators_from_file,
    load,
    load_sublattice,
    module_from_file,
    parse,
    read_json,
    vector_from_file,
)
from src.models.reports import CenterReport, CommutativityReport
from src.models.schemas import (
    Bounds,
    CharacterFile,
    DatumFile,
    ElementFile,
    GeneratorPair,
    GeneratorsFile,
    ModuleFile,
    ScenarioFile,
    SpecFile,
    VectorFile,
)
from src.modules import (
    check_consistency,
    cyclicity_probe,
    dimension_probe,
    exterior_top,
    gk_growth_estimate,
    torsion_search,
)
from src.nilpotent import reduce
from src.utils import canonical_json, config
from src.utils.errors import ComplementNotFoundError, InputFormatError, QTorusError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

Outcome = Tuple[Any, bool]


def _spec(args) -> AlgebraSpec:
    return spec_from_file(load(SpecFile, args.spec))


def _subgroup(args, spec: AlgebraSpec, flag: str = "subgroup") -> Sublattice:
    path = getattr(args, flag, None)
    if path is None:
        return witness_lattice(max_commutative_rank(spec, args.search_bound), spec.rank)
    return load_sublattice(path, spec.rank)


def _module(args, spec: AlgebraSpec):
    """--module when given, otherwise the weight module over --subgroup"""
    if args.module is not None:
        return module_from_file(load(ModuleFile, args.module), spec)
    return weight_module(spec, _subgroup(args, spec), args.s_max)


def _vector(args, module):
    if args.vector is None:
        return module.free_generators()[0]
    return vector_from_file(load(VectorFile, args.vector), module)


def _bounds(args) -> Dict[str, int]:
    """Bounds given on the command line, to override a scenario's"""
    names = ("k_max", "deg_bound", "s_max", "search_bound")
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def _scenario(args) -> ScenarioFile:
    scenario = load(ScenarioFile, args.scenario)
    overrides = _bounds(args)
    if overrides:
        scenario = scenario.model_copy(
            update={"bounds": Bounds(**{**scenario.bounds.model_dump(), **overrides})}
        )
    return scenario


# ============================================================================
# ALGEBRA VERBS
# ============================================================================

def cmd_center(args) -> Outcome:
    """Basis of the center lattice and whether it is trivial"""
    spec = _spec(args)
    center = center_lattice(spec)
    return CenterReport(center_basis=[list(row) for row in center.rows], trivial=has_trivial_center(spec)), True


def cmd_commutative(args) -> Outcome:
    """Is F*B commutative; failing basis pairs are 1-based"""
    spec = _spec(args)
    if args.subgroup is None:
        raise InputFormatError("commutative needs --subgroup")
    lattice = load_sublattice(args.subgroup, spec.rank)
    failures = commutativity_failures(spec, lattice)
    report = CommutativityReport(
        commutative=not failures,
        basis=[list(row) for row in lattice.rows],
        failing_pairs=[[k + 1, l + 1] for k, l in failures],
    )
    return report, report.commutative


def cmd_max_commutative(args) -> Outcome:
    return max_commutative_rank(_spec(args), args.search_bound), True


def cmd_complement(args) -> Outcome:
    """Commuting monomials mu_j x_j^s for the given C"""
    spec = _spec(args)
    if args.c_basis is None:
        raise InputFormatError("complement needs --c-basis")
    lattice = load_sublattice(args.c_basis, spec.rank)
    try:
        solution = virtual_complement(spec, lattice, args.s_max)
    except ComplementNotFoundError as exc:
        return {"error": str(exc), "s_max": exc.s_max}, False
    return {"s": solution.s, "mu": solution.mu, "E_basis": solution.E_basis}, True


def cmd_multiply(args) -> Outcome:
    spec = _spec(args)
    if args.left is None or args.right is None:
        raise InputFormatError("multiply needs --left and --right")
    left = element_from_file(load(ElementFile, args.left), spec)
    right = element_from_file(load(ElementFile, args.right), spec)
    return element_to_file(multiply(left, right)), True


# ============================================================================
# MODULE VERBS
# ============================================================================

def cmd_consistency(args) -> Outcome:
    report = check_consistency(_module(args, _spec(args)))
    return report, report.passed


def cmd_exterior(args) -> Outcome:
    """det A_j satisfies the top exterior power relation"""
    report = exterior_top(_module(args, _spec(args)))
    return report, report.passed and report.power_module_consistent


def cmd_gk(args) -> Outcome:
    module = _module(args, _spec(args))
    v = _vector(args, module) if args.vector is not None else None
    report = gk_growth_estimate(module, v, args.k_max)
    return report, report.stable


def cmd_torsion(args) -> Outcome:
    """Bounded annihilator search over F*B; finding one is not a failure"""
    spec = _spec(args)
    module = _module(args, spec)
    lattice = _subgroup(args, spec, "torsion_subgroup")
    return torsion_search(module, lattice, _vector(args, module), args.deg_bound), True


def cmd_dimension(args) -> Outcome:
    module = _module(args, _spec(args))
    report = dimension_probe(module, args.k_max or config.K_MAX, args.deg_bound)
    return report, report.agrees_with_growth is not False


def cmd_cyclicity(args) -> Outcome:
    module = _module(args, _spec(args))
    k = args.k_max if args.k_max is not None else config.K_MAX
    return cyclicity_probe(module, _vector(args, module), k), True


# ============================================================================
# NILPOTENT VERBS
# ============================================================================

def _group_inputs(args):
    if args.datum is None or args.character is None:
        raise InputFormatError("need --datum and --character")
    datum = datum_from_file(load(DatumFile, args.datum))
    character = character_from_file(load(CharacterFile, args.character))
    return datum, character


def cmd_reduce_nilpotent(args) -> Outcome:
    """Quantum torus of the reduced group algebra"""
    datum, character = _group_inputs(args)
    return spec_to_file(reduce(datum, character)), True


def cmd_theorem_b(args) -> Outcome:
    """Scenario file with a nilpotent section, or --datum/--character/--generators"""
    if args.scenario is not None:
        scenario = _scenario(args)
        if scenario.nilpotent is None:
            raise InputFormatError(f"{args.scenario}: scenario has no 'nilpotent' section")
        nil = scenario.nilpotent
        datum, character = datum_from_file(nil.datum), character_from_file(nil.character)
        pairs, bounds = nil.generators, scenario.bounds
    else:
        datum, character = _group_inputs(args)
        if args.generators is None:
            raise InputFormatError("theorem-b needs --generators or a scenario file")
        data = read_json(args.generators)
        if isinstance(data, list):
            data = {"generators": data}
        pairs = load_generators(data, args.generators)
        bounds = Bounds(**_bounds(args))
    report = theorem_b_harness(datum, character, generators_from_file(pairs, datum), bounds)
    return report, report.passed


def load_generators(data: Any, source: str) -> List[GeneratorPair]:
    return parse(GeneratorsFile, data, str(source)).generators


def cmd_verify_all(args) -> Outcome:
    matrix = verify_all(_scenario(args), args.seed)
    return matrix, matrix.passed


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "center": cmd_center,
    "commutative": cmd_commutative,
    "max-commutative": cmd_max_commutative,
    "complement": cmd_complement,
    "multiply": cmd_multiply,
    "consistency": cmd_consistency,
    "exterior": cmd_exterior,
    "gk": cmd_gk,
    "torsion": cmd_torsion,
    "dimension": cmd_dimension,
    "cyclicity": cmd_cyclicity,
    "reduce-nilpotent": cmd_reduce_nilpotent,
    "theorem-b": cmd_theorem_b,
    "verify-all": cmd_verify_all,
}

SPEC_VERBS = (
    "center", "commutative", "max-commutative", "complement", "multiply",
    "consistency", "exterior", "gk", "torsion", "dimension", "cyclicity",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, default=None, help="Write the report here instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized checks (QTORUS_SEED)")
    common.add_argument("--k-max", type=int, default=None, help="Window radius bound")
    common.add_argument("--deg-bound", type=int, default=None, help="Annihilator degree bound")
    common.add_argument("--s-max", type=int, default=None, help="Largest s tried by the complement solver")
    common.add_argument("--search-bound", type=int, default=None, help="Entry bound for commutative-rank search")

    parser = argparse.ArgumentParser(prog="qtorus", description="Exact computations in quantum tori F*A")
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb in SPEC_VERBS:
        sub = verbs.add_parser(verb, parents=[common], help=(COMMANDS[verb].__doc__ or "").strip() or None)
        sub.add_argument("spec", help="Spec file")
        sub.add_argument("--subgroup", default=None, help="Sublattice file")
        if verb == "complement":
            sub.add_argument("--c-basis", default=None, help="Sublattice file for C")
        if verb == "multiply":
            sub.add_argument("--left", default=None, help="Element file")
            sub.add_argument("--right", default=None, help="Element file")
        if verb in ("consistency", "exterior", "gk", "torsion", "dimension", "cyclicity"):
            sub.add_argument("--module", default=None, help="Module file; the weight module over --subgroup when omitted")
            sub.add_argument("--vector", default=None, help="Module vector file")
        if verb == "torsion":
            sub.add_argument("--over", dest="torsion_subgroup", default=None, help="Sublattice B to search over")

    sub = verbs.add_parser("reduce-nilpotent", parents=[common], help="Reduce a class-2 group algebra")
    sub.add_argument("--datum", default=None)
    sub.add_argument("--character", default=None)

    sub = verbs.add_parser("theorem-b", parents=[common], help="Reduced-module harness")
    sub.add_argument("scenario", nargs="?", default=None, help="Scenario file with a nilpotent section")
    sub.add_argument("--datum", default=None)
    sub.add_argument("--character", default=None)
    sub.add_argument("--generators", default=None)

    sub = verbs.add_parser("verify-all", parents=[common], help="Run the acceptance suite on a scenario")
    sub.add_argument("scenario", help="Scenario file")

    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, dispatch the verb and write its report

    Returns:
        Exit status
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    logger.info("verb %s", args.verb)

    try:
        report, ok = COMMANDS[args.verb](args)
    except (InputFormatError, ValidationError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QTorusError as exc:
        report, ok = {"error": str(exc)}, False

    text = canonical_json(report)
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
