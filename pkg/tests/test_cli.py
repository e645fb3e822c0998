import json

import pytest

from circuitlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_round_trip_is_byte_identical(capsys, tmp_path):
    code, first = run(capsys, "gen", "--family", "matching", "--n", "4")
    assert code == 0
    src = tmp_path / "m4.json"
    src.write_text(first)
    code, second = run(capsys, "gen", "--family", "matching", "--n", "4", "--json", str(tmp_path / "copy.json"))
    assert code == 0
    assert first == second
    assert (tmp_path / "copy.json").read_text() == first
    # load -> re-emit through the library stays identical too
    from circuitlab import HPolytope

    assert HPolytope.from_json_text(first).to_json_text() == first


def test_vertices_by_family_inference(capsys, tmp_path):
    code, out = run(capsys, "gen", "--family", "tsp", "--n", "5")
    p = tmp_path / "tsp5.json"
    p.write_text(out)
    code, out = run(capsys, "vertices", "--polytope", str(p))
    assert code == 0
    assert json.loads(out)["count"] == 12

    code, out = run(capsys, "vertices", "--family", "permatch", "--n", "4")
    assert json.loads(out)["count"] == 3


def test_vertices_generic_fallback(capsys, tmp_path):
    # hand-made square has no recognizable family labels
    square = {
        "ambient_dim": 2,
        "equalities": [],
        "inequalities": [
            {"coeffs": ["1", "0"], "rhs": "1", "label": "r"},
            {"coeffs": ["0", "1"], "rhs": "1", "label": "t"},
            {"coeffs": ["-1", "0"], "rhs": "0", "label": "l"},
            {"coeffs": ["0", "-1"], "rhs": "0", "label": "b"},
        ],
        "description_complete": True,
    }
    p = tmp_path / "square.json"
    p.write_text(json.dumps(square))
    code, out = run(capsys, "vertices", "--polytope", str(p))
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_is_circuit_exit_codes(capsys, tmp_path):
    code, out = run(capsys, "gen", "--family", "matching", "--n", "4")
    p = tmp_path / "m4.json"
    p.write_text(out)
    code, out = run(capsys, "is-circuit", "--polytope", str(p), "--vector", "1,-1,0,0,0,0")
    assert code == 0
    assert json.loads(out)["verdict"] == "circuit"
    # the indicator of the perfect matching {01, 23} is not a circuit
    code, out = run(capsys, "is-circuit", "--polytope", str(p), "--vector", "1,0,0,0,0,1")
    assert code == 2
    assert json.loads(out)["verdict"] == "not-circuit"


def test_step_and_exit_codes(capsys):
    code, out = run(
        capsys,
        "step",
        "--family",
        "matching",
        "--n",
        "4",
        "--point",
        "empty",
        "--vector",
        "1,0,0,0,0,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == "1"
    assert payload["to"][0] == "1"
    # stepping again in the same direction has nowhere to go
    code, out = run(
        capsys,
        "step",
        "--family",
        "matching",
        "--n",
        "4",
        "--point",
        "1,0,0,0,0,0",
        "--vector",
        "1,0,0,0,0,0",
    )
    assert code == 3


def test_budget_exit_code(capsys):
    code, out = run(
        capsys, "circuits", "--family", "matching", "--n", "4", "--budget", "5"
    )
    assert code == 4


def test_incomplete_description_exit_code(capsys):
    # subtour relaxation at n=6 is declared incomplete, so enumeration refuses
    code, out = run(capsys, "circuits", "--family", "tsp", "--n", "6")
    assert code == 5


def test_distance_named_points(capsys):
    code, out = run(
        capsys,
        "distance",
        "--family",
        "matching",
        "--n",
        "4",
        "--from",
        "empty",
        "--to",
        "perfect",
    )
    assert code == 0
    assert json.loads(out)["distance"] == 2


def test_circuits_output(capsys):
    code, out = run(capsys, "circuits", "--family", "matching", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 9
    assert ["1", "0", "0"] in payload["circuits"]


def test_fstab_walk_command(capsys, tmp_path):
    g = tmp_path / "k3.json"
    g.write_text('{"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}')
    code, out = run(capsys, "fstab-walk", "--graph", str(g), "--from", "0", "--to", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["length_budget"] == 20
    assert len(payload["points"]) == len(payload["steps"]) + 1
    code, _ = run(capsys, "fstab-walk", "--graph", str(g), "--from", "0", "--to", "99")
    assert code == 1


def test_verify_unknown_suite(capsys):
    code, _ = run(capsys, "verify", "no-such-suite")
    assert code == 1


def test_verify_json_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out = run(capsys, "verify", "tsp-5", "--json", str(out_path))
    assert code == 0
    assert "suite tsp-5: PASS" in out
    report = json.loads(out_path.read_text())
    assert report["passed"] is True
    assert report["suite"] == "tsp-5"
    assert all(c["passed"] for c in report["checks"])
