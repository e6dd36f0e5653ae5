import json

import pytest

from hyperspectra.cli import EXIT_FAIL, EXIT_GUARD, EXIT_OK, EXIT_USAGE, run
from hyperspectra.generators import example3_pair
from hyperspectra.io import hypergraph_to_dict, load_hypergraph


def run_json(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out) if captured.out.strip() else None, captured.err


def error_of(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


def test_gen_prints_hypergraph(capsys):
    code, data, _ = run_json(capsys, "gen", "complete-uniform", "--m", "3", "--n", "4")
    assert code == EXIT_OK
    assert data["n"] == 4
    assert len(data["edges"]) == 4
    assert data["edges"][0] == {"v": [1, 2, 3], "w": "1"}


def test_gen_writes_file(capsys, tmp_path):
    target = tmp_path / "path.json"
    code = run(["gen", "loose-path", "--m", "3", "--s", "1", "--n", "2", "--out", str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert load_hypergraph(target).edge_count == 2


def test_spectrum(capsys):
    code, data, _ = run_json(capsys, "spectrum", "--in", "complete-uniform:3:4")
    assert code == EXIT_OK
    assert data["n"] == 4
    assert [(round(e["value"], 9), e["multiplicity"]) for e in data["eigenvalues"]] == [(-1.0, 3), (3.0, 1)]


def test_exact_spectrum(capsys):
    code, data, _ = run_json(capsys, "spectrum", "--in", "multipartite:3:2,2,2", "--exact")
    assert code == EXIT_OK
    assert data["source"] == "exact-roots"
    assert [(round(e["value"], 9), e["multiplicity"]) for e in data["eigenvalues"]] == [
        (-2.0, 2), (0.0, 3), (4.0, 1)]


def test_spectrum_as_table(capsys):
    code = run(["--format", "table", "spectrum", "--in", "complete-uniform:3:4"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "eigenvalue" in out and "multiplicity" in out


def test_charpoly(capsys):
    code, data, _ = run_json(capsys, "charpoly", "--in", "multipartite:3:2,2,2")
    assert code == EXIT_OK
    assert data["degree"] == 6
    assert data["coefficients"] == ["0", "0", "0", "-16", "-12", "0", "1"]


def test_partition_coarsest(capsys):
    code, data, _ = run_json(capsys, "partition", "--in", "loose-path:3:1:2")
    assert code == EXIT_OK
    assert data["cells"] == [[1, 2, 4, 5], [3]]
    assert data["equitable"] is True
    assert data["B"] == [["1/2", "1/2"], ["2", "0"]]


def test_partition_check_reports_witness(capsys):
    code, data, _ = run_json(capsys, "partition", "--in", "loose-path:3:1:2", "--check", "[[1],[2,3,4,5]]")
    assert code == EXIT_OK
    assert data["equitable"] is False
    assert data["witness"] == [2, 1, 2, 4]


def test_join_check_formula(capsys):
    code, data, _ = run_json(capsys, "join", "--members", "empty:3:2", "empty:3:3", "--m", "3", "--check-formula")
    assert code == EXIT_OK
    assert data["verdict"] == "PASS"
    assert all(data["checks"].values())


def test_join_needs_one_mode(capsys):
    code, _, err = run_json(capsys, "join", "--m", "3")
    assert code == EXIT_USAGE
    assert error_of(err)["error"] == "UsageError"


def test_corona_prediction(capsys):
    code, data, _ = run_json(capsys, "corona", "vertex", "--base", "complete-uniform:3:4",
                             "--members", "empty:3:1", "--p", "4", "--predict")
    assert code == EXIT_OK
    assert data["n"] == 8
    assert data["max_deviation"] < 1e-8


def test_corona_constants_table(capsys):
    code, data, _ = run_json(capsys, "corona", "constants", "--kind", "edge", "--base", "complete-uniform:3:4",
                             "--n1", "2")
    assert code == EXIT_OK
    rows = {row["name"]: row for row in data["constants"]}
    assert (rows["a"]["oracle"], rows["a"]["paper"]) == ("1", "2")
    assert not any(row["match"] for row in rows.values())


def test_switch(capsys):
    code, data, _ = run_json(capsys, "switch", "--in", "example3-h0", "--cells", "[[1,2,3,4,5,6]]", "--d", "7,8")
    assert code == EXIT_OK
    _, g0 = example3_pair()
    assert data["edges"] == hypergraph_to_dict(g0)["edges"]


def test_cospectral_check(capsys):
    code, data, _ = run_json(capsys, "cospectral", "--a", "example3-h0", "--b", "example3-g0", "--exact")
    assert code == EXIT_OK
    assert data == {"cospectral": True, "mode": "exact", "isomorphic": False}


def test_cospectral_defaults_to_exact_certificate(capsys):
    code, data, _ = run_json(capsys, "cospectral", "--a", "example3-h0", "--b", "example3-g0")
    assert code == EXIT_OK
    assert data["mode"] == "exact" and data["cospectral"] is True


def test_cospectral_numeric_fallback_above_charpoly_limit(capsys):
    code, data, _ = run_json(capsys, "cospectral", "--a", "path:41", "--b", "path:41")
    assert code == EXIT_OK
    assert data == {"cospectral": True, "mode": "numeric"}


def test_cospectral_numeric_flag(capsys):
    code, data, _ = run_json(capsys, "cospectral", "--a", "loose-path:3:1:2", "--b", "loose-path:3:1:2", "--numeric")
    assert code == EXIT_OK
    assert data == {"cospectral": True, "mode": "numeric", "isomorphic": True}


def test_verify_with_extra_parameters(capsys):
    code, data, _ = run_json(capsys, "verify", "remark1", "--m", "3", "--n", "2")
    assert code == EXIT_OK
    assert data["verdict"] == "PASS"
    assert data["parameters"] == {"m": 3, "n": 2}


def test_verify_with_param_pairs(capsys):
    code, data, _ = run_json(capsys, "verify", "remark1", "--param", "m=4")
    assert code == EXIT_OK
    assert data["parameters"] == {"m": 4, "n": 1}


def test_verify_unknown_theorem(capsys):
    code, _, err = run_json(capsys, "verify", "thm2")
    assert code == EXIT_USAGE
    assert error_of(err)["error"] == "UnknownTheorem"


def test_verify_all_writes_report(capsys, reports_dir):
    code, data, _ = run_json(capsys, "verify-all", "--only", "remark1")
    assert code == EXIT_OK
    assert data["total"] == 4 and data["failed"] == 0
    saved = json.loads((reports_dir / "verify-all.json").read_text(encoding="utf-8"))
    assert [r["verdict"] for r in saved] == ["PASS"] * 4


def test_verify_all_with_failing_suite(capsys, reports_dir, tmp_path):
    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps([{"id": "thm6", "params": {"m": 3, "s": 2, "n": 3}}]), encoding="utf-8")
    code, data, _ = run_json(capsys, "verify-all", "--suite", str(suite))
    assert code == EXIT_FAIL
    assert data["failed"] == 1


def test_theorems(capsys):
    code, data, _ = run_json(capsys, "theorems")
    assert code == EXIT_OK
    assert len(data) == 21
    assert {"id", "name", "description", "tolerance", "params_schema"} <= set(data[0])


# --- Ошибки и коды выхода ---

def test_missing_file(capsys, tmp_path):
    code, _, err = run_json(capsys, "spectrum", "--in", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE
    assert error_of(err)["error"] == "FileNotFound"


def test_enumeration_guard_exit_code(capsys):
    code, _, err = run_json(capsys, "spectrum", "--in", "complete-uniform:3:21")
    assert code == EXIT_GUARD
    assert error_of(err)["error"] == "TooLarge"


@pytest.mark.parametrize("argv", [
    ["spectrum"],
    ["theorems", "--bogus"],
    ["gen", "nothing"],
    ["charpoly", "--in", "{\"n\": 2, \"edges\": [[1, 2]], "],
])
def test_usage_and_format_errors(capsys, argv):
    code, _, err = run_json(capsys, *argv)
    assert code == EXIT_USAGE
    assert error_of(err)["error"] in ("UsageError", "FormatError")
