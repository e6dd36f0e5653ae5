import json
from fractions import Fraction

import pytest

from hyperspectra.core.exceptions import FormatError, UnknownTheoremError
from hyperspectra.registry import (
    coerce_params, describe_theorems, get_theorem, load_suite, load_theorems, run_suite, run_theorem,
)

THEOREM_IDS = {
    "coeff-oracle", "cor1", "cor2", "cor3", "cor4", "cor5", "cor6", "eigensolver", "family",
    "note-two-block", "prop1", "prop2", "prop3", "remark1", "scaling", "thm1", "thm3", "thm4",
    "thm5", "thm6", "thm7",
}

SUITE = load_suite()


def test_all_plugins_are_loaded():
    assert set(load_theorems(force=True)) == THEOREM_IDS


def test_describe_theorems_hides_callables():
    described = describe_theorems()
    assert [item["id"] for item in described] == sorted(THEOREM_IDS)
    assert all("verify" not in item and "module" not in item for item in described)
    remark = next(item for item in described if item["id"] == "remark1")
    assert [p["name"] for p in remark["params_schema"]] == ["m", "n"]


def test_unknown_theorem():
    with pytest.raises(UnknownTheoremError):
        get_theorem("thm2")


def test_suite_references_known_theorems():
    assert len(SUITE) == 31
    assert {entry["id"] for entry in SUITE} <= THEOREM_IDS


@pytest.mark.parametrize("entry", SUITE, ids=[f"{i}-{e['id']}" for i, e in enumerate(SUITE)])
def test_acceptance_suite_passes(entry):
    report = run_theorem(entry["id"], entry.get("params"))
    assert report.verdict == "PASS", report.notes
    assert report.max_deviation <= report.tolerance


# --- Параметры ---

SCHEMA = [
    {"name": "m", "type": "int", "default": 3},
    {"name": "sizes", "type": "ints", "default": "1,2"},
    {"name": "w", "type": "rational", "default": "1/2"},
    {"name": "flag", "type": "bool", "default": False},
    {"name": "h", "type": "hypergraph", "default": None},
]


def test_coerce_defaults_and_strings():
    params = coerce_params(SCHEMA, {"m": "4", "sizes": "2, 3,4", "flag": "yes", "h": "complete-uniform:3:4"})
    assert params["m"] == 4
    assert params["sizes"] == [2, 3, 4]
    assert params["w"] == Fraction(1, 2)
    assert params["flag"] is True
    assert params["h"].edge_count == 4
    assert coerce_params(SCHEMA, None)["h"] is None


@pytest.mark.parametrize("params", [{"k": 1}, {"m": "three"}, {"flag": "maybe"}, {"w": "1/0"}])
def test_coerce_rejects_bad_values(params):
    with pytest.raises(FormatError):
        coerce_params(SCHEMA, params)


def test_remark1_with_overridden_parameters():
    report = run_theorem("remark1", {"m": 4, "n": 2})
    assert report.verdict == "PASS"
    assert report.parameters == {"m": 4, "n": 2}
    assert len(report.observed) == 8


def test_paper_constants_are_documented():
    report = run_theorem("cor6", include_paper_constants=True)
    assert report.constants
    assert report.verdict == "DISCREPANCY-DOCUMENTED"


# --- Прогон набора ---

def test_run_suite_turns_errors_into_fail(tmp_path):
    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps([
        {"id": "remark1", "params": {"m": 3, "n": 1}},
        {"id": "thm6", "params": {"m": 3, "s": 2, "n": 3}},
        {"id": "remark1", "params": {"q": 1}},
        {"id": "no-such-theorem"},
    ]), encoding="utf-8")
    seen = []
    reports = run_suite(suite_path=suite, on_report=lambda index, total, report: seen.append((index, total)))
    assert [r.verdict for r in reports] == ["PASS", "FAIL", "FAIL", "FAIL"]
    assert reports[1].max_deviation == 1e300
    assert reports[1].notes[0].startswith("UnsupportedRegime")
    assert reports[3].notes[0].startswith("UnknownTheorem")
    assert seen == [(1, 4), (2, 4), (3, 4), (4, 4)]


def test_run_suite_only_filter(tmp_path):
    reports = run_suite(only=["remark1"])
    assert len(reports) == 4
    assert all(r.theorem_id == "remark1" and r.verdict == "PASS" for r in reports)


def test_suite_must_be_a_list(tmp_path):
    suite = tmp_path / "suite.json"
    suite.write_text('{"id": "remark1"}', encoding="utf-8")
    with pytest.raises(FormatError):
        load_suite(suite)
