import json
from fractions import Fraction

import pytest

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import (
    BadArityError, BadLoosenessError, DegenerateCycleError, FileNotFoundProcessingError, FormatError,
    ModeArityMismatchError, TooLargeError,
)
from hyperspectra.core.hypergraph import is_isomorphic, is_regular, is_uniform
from hyperspectra.generators import (
    complete_graph, complete_multipartite, complete_uniform, cycle_graph, empty_uniform, example3_h1,
    example3_pair, from_spec, loose_cycle, loose_path, path_graph,
)
from hyperspectra.io import (
    dump_hypergraph, hypergraph_to_dict, load_hypergraph, resolve_hypergraph, resolve_hypergraphs,
)


def test_complete_uniform_counts():
    h = complete_uniform(3, 5)
    assert h.n == 5
    assert h.edge_count == 10
    assert is_regular(h) == 6


def test_complete_uniform_weight():
    h = complete_uniform(2, 3, "2/3")
    assert {w for _, w in h.edges} == {Fraction(2, 3)}


def test_weak_multipartite_edges_meet_every_part():
    h = complete_multipartite(3, [2, 3, 4])
    assert h.n == 9
    assert h.edge_count == 24
    assert all(len(edge) == 3 for edge, _ in h.edges)


def test_weak_multipartite_with_more_room_than_parts():
    # m > k: ребро может взять две вершины из одной доли
    h = complete_multipartite(3, [2, 2])
    assert h.edge_count == 4


def test_strong_multipartite_is_rainbow():
    h = complete_multipartite(2, [1, 2, 3], mode="strong")
    assert h.edge_count == 11
    assert is_uniform(h) == 2


def test_loose_path_layout():
    h = loose_path(3, 1, 2)
    assert h.n == 5
    assert [edge for edge, _ in h.edges] == [(1, 2, 3), (3, 4, 5)]


def test_loose_cycle_wraps_around():
    h = loose_cycle(3, 1, 3)
    assert h.n == 6
    assert [edge for edge, _ in h.edges] == [(1, 2, 3), (1, 5, 6), (3, 4, 5)]


def test_graph_generators():
    assert path_graph(4).edge_count == 3
    assert cycle_graph(5).edge_count == 5
    assert complete_graph(4).edge_count == 6
    assert is_regular(cycle_graph(5)) == 2


@pytest.mark.parametrize("build, error", [
    (lambda: loose_cycle(2, 1, 2), DegenerateCycleError),
    (lambda: loose_path(3, 2, 2), BadLoosenessError),
    (lambda: complete_uniform(4, 3), BadArityError),
    (lambda: complete_multipartite(2, [1, 1, 1]), ModeArityMismatchError),
    (lambda: complete_multipartite(4, [1, 1, 1], mode="strong"), ModeArityMismatchError),
])
def test_generator_errors(build, error):
    with pytest.raises(error):
        build()


def test_enumeration_guard(monkeypatch):
    monkeypatch.setattr(settings, "MAX_ENUM", 6)
    with pytest.raises(TooLargeError):
        complete_uniform(3, 7)


def test_example3_seed_and_pair():
    h1 = example3_h1()
    assert h1.n == 6 and is_regular(h1) == 2
    h0, g0 = example3_pair()
    assert h0.n == g0.n == 8
    assert h0.edge_count == g0.edge_count == 7


# --- Строковые описания ---

@pytest.mark.parametrize("text, n, edges", [
    ("complete-uniform:3:4", 4, 4),
    ("multipartite:3:2,3,4", 9, 24),
    ("multipartite:2:1,2,3:strong", 6, 11),
    ("loose-cycle:3:1:3", 6, 3),
    ("empty:3:2", 2, 0),
    ("example3-g0", 8, 7),
])
def test_from_spec(text, n, edges):
    h = from_spec(text)
    assert (h.n, h.edge_count) == (n, edges)


@pytest.mark.parametrize("text", ["nope:1", "complete-uniform:3", "loose-path:3:x:2"])
def test_from_spec_errors(text):
    with pytest.raises(FormatError):
        from_spec(text)


# --- JSON ---

def test_dump_and_load(tmp_path):
    h = complete_uniform(3, 4, "1/2")
    path = dump_hypergraph(h, tmp_path / "k34.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["n"] == 4
    assert data["edges"][0] == {"v": [1, 2, 3], "w": "1/2"}
    loaded = load_hypergraph(path)
    assert loaded.edges == h.edges
    assert loaded.uniformity == 3


def test_empty_hypergraph_document():
    data = hypergraph_to_dict(empty_uniform(3, 2))
    assert data == {"n": 2, "edges": [], "label": "empty^3_2", "uniformity": 3}


def test_resolve_inline_json_with_bare_edges():
    h = resolve_hypergraph('{"n": 3, "edges": [[1, 2, 3], {"v": [1, 2], "w": "1/3"}]}')
    assert h.edge_weights[(1, 2, 3)] == 1
    assert h.edge_weights[(1, 2)] == Fraction(1, 3)


@pytest.mark.parametrize("text", [
    '{"n": 3, "edges": [{"v": [1, 2], "w": 0.5}]}',
    '{"n": 3, "edges": [{"v": [1, 2], "w": "0.5"}]}',
    '{"edges": []}',
    '{"n": 3, "edges": [',
])
def test_resolve_rejects_bad_documents(text):
    with pytest.raises(FormatError):
        resolve_hypergraph(text)


def test_resolve_many_and_missing_file(tmp_path):
    items = resolve_hypergraphs("example3-h0; example3-g0")
    assert len(items) == 2
    assert not is_isomorphic(*items)
    with pytest.raises(FileNotFoundProcessingError):
        resolve_hypergraph(str(tmp_path / "missing.json"))


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(FormatError):
        load_hypergraph(path)
