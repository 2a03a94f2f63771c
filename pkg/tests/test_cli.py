"""
Command line: verbs, canonical output and exit codes
"""
import json

import pytest

from src.main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, build_parser, run


def write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def monomial_file(path, exponent):
    term = {"exponent": exponent, "coeff": [{"free_exponents": [0], "cyclotomic": ["1"]}]}
    return write(path, {"terms": [term]})


@pytest.fixture
def plane_spec(scenarios_dir):
    return str(scenarios_dir / "generic_quantum_plane_spec.json")


# ============================================================================
# ALGEBRA VERBS
# ============================================================================

def test_center(plane_spec, capsys):
    assert run(["center", plane_spec]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out == {"center_basis": [], "trivial": True}


def test_complement_matches_golden(scenarios_dir, golden_dir, capsys):
    code = run([
        "complement",
        str(scenarios_dir / "complement_example_spec.json"),
        "--c-basis",
        str(scenarios_dir / "complement_example_C.json"),
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == (golden_dir / "complement_example.json").read_text()


def test_complement_needs_c_basis(plane_spec):
    assert run(["complement", plane_spec]) == EXIT_INPUT


def test_commutative_failure_exit_code(plane_spec, tmp_path, capsys):
    subgroup = write(tmp_path / "full.json", {"basis": [[1, 0], [0, 1]]})
    assert run(["commutative", plane_spec, "--subgroup", subgroup]) == EXIT_FAILED
    out = json.loads(capsys.readouterr().out)
    assert out["commutative"] is False
    assert out["failing_pairs"] == [[1, 2]]


def test_multiply(plane_spec, tmp_path, capsys):
    left = monomial_file(tmp_path / "x1.json", [1, 0])
    right = monomial_file(tmp_path / "x2.json", [0, 1])
    assert run(["multiply", plane_spec, "--left", left, "--right", right]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert [term["exponent"] for term in out["terms"]] == [[1, 1]]


def test_output_file(plane_spec, tmp_path, capsys):
    target = tmp_path / "center.json"
    assert run(["center", plane_spec, "--output", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["trivial"] is True


# ============================================================================
# MODULE VERBS
# ============================================================================

def test_gk_on_weight_module(plane_spec, tmp_path, capsys):
    subgroup = write(tmp_path / "c.json", [[1, 0]])
    assert run(["gk", plane_spec, "--subgroup", subgroup, "--k-max", "4"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["degree"] == 1
    assert out["dims"] == [1, 3, 5, 7, 9]


def test_torsion_over_second_axis(plane_spec, tmp_path, capsys):
    subgroup = write(tmp_path / "c.json", [[1, 0]])
    over = write(tmp_path / "b.json", [[0, 1]])
    assert run(["torsion", plane_spec, "--subgroup", subgroup, "--over", over]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["found"] is True


def test_consistency(plane_spec, capsys):
    assert run(["consistency", plane_spec]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"] is True


# ============================================================================
# GROUPS AND SCENARIOS
# ============================================================================

def test_reduce_nilpotent_matches_golden(scenarios_dir, golden_dir, capsys):
    code = run([
        "reduce-nilpotent",
        "--datum",
        str(scenarios_dir / "heisenberg_datum.json"),
        "--character",
        str(scenarios_dir / "heisenberg_generic_character.json"),
    ])
    assert code == EXIT_OK
    assert capsys.readouterr().out == (golden_dir / "generic_quantum_plane.json").read_text()


def test_theorem_b_from_flags(scenarios_dir, capsys):
    code = run([
        "theorem-b",
        "--datum",
        str(scenarios_dir / "heisenberg_datum.json"),
        "--character",
        str(scenarios_dir / "heisenberg_generic_character.json"),
        "--generators",
        str(scenarios_dir / "heisenberg_generators.json"),
        "--k-max",
        "4",
    ])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out)["hypothesis_met"] is True


def test_theorem_b_needs_nilpotent_section(scenarios_dir):
    assert run(["theorem-b", str(scenarios_dir / "cyclotomic_negative_control.json")]) == EXIT_INPUT


def test_verify_all(scenarios_dir, capsys):
    assert run(["verify-all", str(scenarios_dir / "generic_quantum_plane.json"), "--k-max", "4"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["passed"] is True
    assert out["name"] == "generic_quantum_plane"


# ============================================================================
# INPUT ERRORS
# ============================================================================

def test_empty_scenario(tmp_path):
    assert run(["verify-all", write(tmp_path / "empty.json", {})]) == EXIT_INPUT


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run(["center", str(path)]) == EXIT_INPUT


def test_missing_file(tmp_path):
    assert run(["center", str(tmp_path / "missing.json")]) == EXIT_INPUT


def test_malformed_spec(tmp_path):
    spec = write(tmp_path / "spec.json", {"rank": 2, "q": [{"i": 2, "j": 1, "tors": 0, "free": []}], "free_params": 1})
    assert run(["center", spec]) == EXIT_INPUT


def test_parser_requires_verb():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


@pytest.mark.parametrize("bad", ["abc", "1/0"])
def test_malformed_rational(plane_spec, tmp_path, capsys, bad):
    term = {"exponent": [1, 0], "coeff": [{"free_exponents": [0], "cyclotomic": [bad]}]}
    left = write(tmp_path / "bad.json", {"terms": [term]})
    right = monomial_file(tmp_path / "x2.json", [0, 1])
    assert run(["multiply", plane_spec, "--left", left, "--right", right]) == EXIT_INPUT
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "cyclotomic" in captured.err
