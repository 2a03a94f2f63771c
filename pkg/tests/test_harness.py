"""
Acceptance runs on the bundled scenarios and the sampled checks behind them
"""
import pytest
from pydantic import ValidationError

from src.harness import AcceptanceRunner, verify_all
from src.harness.checks import center_oracle, cocycle_identity, defining_relations
from src.models.loaders import load, parse
from src.models.schemas import ScenarioFile
from src.utils.errors import InputFormatError


def statuses(matrix):
    return {check.name: check.status for check in matrix.checks}


@pytest.fixture
def generic_scenario(scenarios_dir) -> ScenarioFile:
    return load(ScenarioFile, scenarios_dir / "generic_quantum_plane.json")


@pytest.fixture
def negative_scenario(scenarios_dir) -> ScenarioFile:
    return load(ScenarioFile, scenarios_dir / "cyclotomic_negative_control.json")


def test_generic_plane_scenario(generic_scenario):
    matrix = verify_all(generic_scenario, seed=7)
    assert matrix.name == "generic_quantum_plane"
    assert matrix.passed
    found = statuses(matrix)
    assert found["trivial center"] == "pass"
    assert found["complement closed loop"] == "pass"
    assert found["growth degree equals rank C"] == "pass"
    assert found["finite length certificate"] == "pass"
    assert found["cyclicity evidence"] == "pass"
    assert found["nilpotent: finite length evidence"] == "pass"


def test_negative_control_scenario(negative_scenario):
    matrix = AcceptanceRunner().run(negative_scenario)
    assert matrix.passed
    found = statuses(matrix)
    assert found["trivial center"] == "hypothesis not met"
    assert found["cyclicity evidence"] == "hypothesis not met"
    assert found["finite length certificate"] == "skipped"
    assert not any(name.startswith("nilpotent") for name in found)
    probe = next(c for c in matrix.checks if c.name == "cyclicity evidence")
    assert probe.detail["interior_attained"] == 0


def test_scenario_from_nilpotent_section_only(generic_scenario):
    """Without a spec the algebra comes from reducing the group data"""
    scenario = generic_scenario.model_copy(update={"spec": None, "subgroup": None, "probe_vector": None})
    matrix = verify_all(scenario)
    assert matrix.passed
    assert statuses(matrix)["subgroup commutative"] == "pass"


def test_non_commutative_subgroup_fails(negative_scenario):
    scenario = negative_scenario.model_copy(update={"subgroup": [[1, 0], [0, 1]]})
    matrix = verify_all(scenario)
    assert not matrix.passed
    assert statuses(matrix)["subgroup commutative"] == "fail"
    assert "module consistency" not in statuses(matrix)


def test_empty_scenario_rejected():
    with pytest.raises(ValidationError):
        ScenarioFile.model_validate({"name": "empty"})


def test_parse_wraps_errors():
    with pytest.raises(InputFormatError):
        parse(ScenarioFile, {"name": "empty"})


def test_sampled_checks_are_seeded(plane, rng):
    assert cocycle_identity(plane, rng, 10).status == "pass"
    assert defining_relations(plane, rng, 10).status == "pass"
    assert center_oracle(plane, 3).status == "pass"
