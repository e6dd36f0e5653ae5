import time

import pytest
from fastapi.testclient import TestClient

from hyperspectra import api
from hyperspectra.core.storage import StatusStorage
from hyperspectra.generators import complete_uniform, loose_path
from hyperspectra.io import hypergraph_to_dict


@pytest.fixture
def client(monkeypatch, reports_dir):
    monkeypatch.setattr(api, "status_storage", StatusStorage())
    with TestClient(api.app) as test_client:
        yield test_client


def wait_for_verify_all(client, timeout: float = 60.0) -> dict:
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        status = client.get("/api/verify-all/status").json()
        if not status["is_running"]:
            return status
        time.sleep(0.05)
    pytest.fail("verify-all did not finish in time")


def test_root(client):
    assert client.get("/").json() == {"message": "hyperspectra API is running"}


def test_theorems(client):
    ids = [item["id"] for item in client.get("/api/theorems").json()]
    assert len(ids) == 21
    assert "remark1" in ids


def test_spectrum(client):
    response = client.post("/api/spectrum", json={"hypergraph": hypergraph_to_dict(complete_uniform(3, 4))})
    assert response.status_code == 200
    data = response.json()
    assert data["order"] == 4
    assert [(round(e["value"], 9), e["multiplicity"]) for e in data["eigenvalues"]] == [(-1.0, 3), (3.0, 1)]


def test_exact_spectrum_with_fraction_weights(client):
    body = {"hypergraph": {"n": 3, "edges": [{"v": [1, 2, 3], "w": "2"}]}, "exact": True}
    data = client.post("/api/spectrum", json=body).json()
    assert data["source"] == "exact-roots"
    assert [(round(e["value"], 9), e["multiplicity"]) for e in data["eigenvalues"]] == [(-1.0, 2), (2.0, 1)]


def test_charpoly(client):
    body = {"hypergraph": {"n": 3, "edges": [[1, 2, 3]]}}
    data = client.post("/api/charpoly", json=body).json()
    # (x - 1)(x + 1/2)^2
    assert data == {"n": 3, "degree": 3, "coefficients": ["-1/4", "-3/4", "0", "1"]}


def test_partition(client):
    body = {"hypergraph": hypergraph_to_dict(loose_path(3, 1, 2))}
    data = client.post("/api/partition", json=body).json()
    assert data == {"cells": [[1, 2, 4, 5], [3]], "equitable": True, "B": [["1/2", "1/2"], ["2", "0"]]}


def test_partition_orbits(client):
    body = {"hypergraph": hypergraph_to_dict(loose_path(3, 1, 2)), "orbits": True}
    assert client.post("/api/partition", json=body).json()["cells"] == [[1, 2, 4, 5], [3]]


def test_verify(client):
    response = client.post("/api/verify/remark1", json={"params": {"m": 3, "n": 2}})
    assert response.status_code == 200
    assert response.json()["verdict"] == "PASS"


def test_verify_documents_printed_constants(client):
    response = client.post("/api/verify/cor6", json={"include_paper_constants": True})
    assert response.json()["verdict"] == "DISCREPANCY-DOCUMENTED"


# --- Ошибки ---

def test_guard_maps_to_413(client):
    response = client.post("/api/charpoly", json={"hypergraph": {"n": 41, "edges": []}})
    assert response.status_code == 413
    assert response.json()["error"] == "TooLarge"


@pytest.mark.parametrize("body, code", [
    ({"hypergraph": {"n": 3, "edges": [{"v": [1, 2], "w": 0.5}]}}, "FormatError"),
    ({"hypergraph": {"n": 3, "edges": [[1, 2], [2, 1]]}}, "DuplicateEdge"),
    ({"hypergraph": {"n": 3, "edges": [[1, 4]]}}, "VertexOutOfRange"),
    ({"hypergraph": {"n": 3, "edges": [[1, 1, 2]]}}, "RepeatedVertex"),
])
def test_bad_hypergraph_maps_to_400(client, body, code):
    response = client.post("/api/spectrum", json=body)
    assert response.status_code == 400
    assert response.json()["error"] == code


def test_unknown_theorem_and_parameters(client):
    response = client.post("/api/verify/thm2", json={})
    assert response.status_code == 400
    assert response.json()["error"] == "UnknownTheorem"
    response = client.post("/api/verify/remark1", json={"params": {"q": 1}})
    assert response.json()["error"] == "FormatError"


# --- Фоновый прогон ---

def test_status_before_any_run(client):
    status = client.get("/api/verify-all/status").json()
    assert status["is_running"] is False
    assert status["message"] == "Проверка не запущена."


def test_verify_all_in_background(client, reports_dir):
    response = client.post("/api/verify-all", json={"only": ["remark1"]})
    assert response.json() == {"status": "started", "total": 4}
    assert client.post("/api/verify-all", json={"only": ["remark1"]}).status_code == 409

    status = wait_for_verify_all(client)
    assert status["processed"] == status["total"] == 4
    assert status["failed"] == 0
    assert status["percentage"] == 100.0
    assert [r["verdict"] for r in status["reports"]] == ["PASS"] * 4
    assert (reports_dir / "verify-all.json").exists()
