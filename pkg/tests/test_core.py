import asyncio
from fractions import Fraction

import pytest

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import (
    DuplicateEdgeError, EmptyVertexSetError, FileNotFoundProcessingError, FormatError, NegativeWeightError,
    RepeatedVertexError, SingletonEdgeError, TooLargeError, TooSmallError, VertexOutOfRangeError,
)
from hyperspectra.core.guards import InputPaths, SizeGuard
from hyperspectra.core.hypergraph import (
    codegree, induced_subhypergraph, is_connected, is_isomorphic, is_regular, is_uniform,
    iter_isomorphisms, new_hypergraph, valency,
)
from hyperspectra.core.rational import RationalMatrix, format_rational, parse_rational
from hyperspectra.core.storage import StatusStorage
from hyperspectra.generators import complete_uniform, empty_uniform, loose_path


# --- Рациональные числа ---

@pytest.mark.parametrize("text, expected", [
    ("1/2", Fraction(1, 2)),
    ("-3/6", Fraction(-1, 2)),
    ("7", Fraction(7)),
    (" 2 / 4 ", Fraction(1, 2)),
    (5, Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", 0.5, True])
def test_parse_rational_rejects_non_exact(bad):
    with pytest.raises(FormatError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-2, 4)) == "-1/2"


def test_rational_matrix_determinant_and_product():
    m = RationalMatrix.from_rows([["1/2", 1], [2, 3]])
    assert m.determinant() == Fraction(-1, 2)
    assert (m @ RationalMatrix.identity(2)) == m
    assert m.transpose()[0, 1] == 2
    assert (m - m) == RationalMatrix.zeros(2)
    assert m.trace() == Fraction(7, 2)


# --- Гиперграф и матрица смежности ---

def test_adjacency_of_single_triple_is_one_half():
    h = new_hypergraph(3, [((1, 2, 3), 1)])
    a = h.adjacency
    for i in range(3):
        for j in range(3):
            assert a[i, j] == (0 if i == j else Fraction(1, 2))


def test_adjacency_of_k34_is_all_ones():
    a = complete_uniform(3, 4).adjacency
    assert a.is_symmetric()
    assert all(a[i, j] == (0 if i == j else 1) for i in range(4) for j in range(4))


def test_weighted_edge_contributes_w_over_size_minus_one():
    h = new_hypergraph(4, [((1, 2, 3, 4), "3/2"), ((1, 2), 1)])
    assert h.adjacency[0, 1] == Fraction(3, 2) / 3 + 1
    assert h.adjacency[2, 3] == Fraction(1, 2)


def test_edges_are_normalized_and_sorted():
    h = new_hypergraph(4, [((4, 2, 3), 1), ((2, 1), "1/3")])
    assert h.edges == (((1, 2), Fraction(1, 3)), ((2, 3, 4), Fraction(1)))


@pytest.mark.parametrize("n, edges, error", [
    (3, [((1, 4), 1)], VertexOutOfRangeError),
    (3, [((1, 1, 2), 1)], RepeatedVertexError),
    (3, [((1, 2), 1), ((2, 1), 1)], DuplicateEdgeError),
    (3, [((1, 2), "-1")], NegativeWeightError),
    (0, [], TooSmallError),
])
def test_invalid_hypergraphs(n, edges, error):
    with pytest.raises(error):
        new_hypergraph(n, edges)


def test_singleton_edge_fails_on_adjacency():
    h = new_hypergraph(2, [((1,), 1)])
    with pytest.raises(SingletonEdgeError):
        _ = h.adjacency


def test_valency_codegree_and_regularity():
    h = complete_uniform(3, 4)
    assert valency(h, 1) == 3
    assert codegree(h, 1, 2) == 2
    assert is_regular(h) == 3
    assert is_uniform(h) == 3
    assert is_regular(loose_path(3, 1, 2)) is None


def test_empty_uniform_keeps_declared_arity():
    h = empty_uniform(3, 2)
    assert h.edge_count == 0
    assert is_uniform(h) == 3
    assert is_regular(h) == 0
    assert not is_connected(h)


def test_mixed_arity_is_not_uniform():
    h = new_hypergraph(4, [((1, 2), 1), ((2, 3, 4), 1)])
    assert is_uniform(h) is None
    assert is_connected(h)


def test_induced_subhypergraph_relabels():
    sub, mapping = induced_subhypergraph(loose_path(3, 1, 2), [3, 4, 5])
    assert mapping == {3: 1, 4: 2, 5: 3}
    assert sub.edges == (((1, 2, 3), Fraction(1)),)
    with pytest.raises(EmptyVertexSetError):
        induced_subhypergraph(sub, [])


# --- Изоморфизмы ---

def test_relabeled_hypergraph_is_isomorphic():
    h = loose_path(3, 1, 2)
    shuffled = h.relabel({1: 5, 2: 3, 3: 1, 4: 2, 5: 4})
    assert is_isomorphic(h, shuffled)


def test_isomorphism_respects_weights():
    h1 = new_hypergraph(3, [((1, 2), 1), ((2, 3), 2)])
    h2 = new_hypergraph(3, [((1, 2), 2), ((2, 3), 1)])
    h3 = new_hypergraph(3, [((1, 2), 1), ((2, 3), 3)])
    assert is_isomorphic(h1, h2)
    assert not is_isomorphic(h1, h3)


def test_automorphisms_of_k34():
    h = complete_uniform(3, 4)
    assert sum(1 for _ in iter_isomorphisms(h, h)) == 24


def test_example3_pair_is_not_isomorphic(example3):
    h0, g0 = example3
    assert not is_isomorphic(h0, g0)


def test_isomorphism_guard():
    h = empty_uniform(3, 11)
    with pytest.raises(TooLargeError):
        is_isomorphic(h, h)


# --- Ограничения и пути ---

def test_size_guard_limits(monkeypatch):
    monkeypatch.setattr(settings, "MAX_ENUM", 5)
    assert SizeGuard.check_enumeration(5) == 5
    with pytest.raises(TooLargeError) as excinfo:
        SizeGuard.check_enumeration(6, "test")
    assert excinfo.value.exit_code == 3


def test_input_paths(tmp_path):
    target = tmp_path / "h.json"
    target.write_text("{}", encoding="utf-8")
    assert InputPaths.existing_file(str(target)) == target
    with pytest.raises(FileNotFoundProcessingError):
        InputPaths.existing_file(str(tmp_path / "missing.json"))


# --- Хранилище статусов ---

def test_status_storage_run_lifecycle():
    asyncio.run(_run_lifecycle(StatusStorage()))


async def _run_lifecycle(storage):
    assert (await storage.get_status("run")).never_started
    assert await storage.try_start("run", total=2)
    assert not await storage.try_start("run", total=5)

    await storage.set_current("run", "remark1")
    await storage.record_report("run", 1, {"theorem_id": "remark1", "verdict": "PASS"})
    snapshot = await storage.get_status("run")
    await storage.record_report("run", 2, {"theorem_id": "thm6", "verdict": "FAIL"})
    # снимок не меняется вместе с хранилищем
    assert len(snapshot.reports) == 1 and snapshot.percentage == 50.0

    reports = await storage.finish("run", "done")
    status = await storage.get_status("run")
    assert [r["verdict"] for r in reports] == ["PASS", "FAIL"]
    assert (status.is_running, status.processed, status.failed, status.current_theorem) == (False, 2, 1, "")
    assert not status.never_started
    assert await storage.try_start("run", total=1)
