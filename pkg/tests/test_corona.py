from fractions import Fraction

import pytest

from hyperspectra.core.exceptions import (
    ArityError, CountMismatchError, EmptyVertexSetError, HypothesisViolatedError, PartitionMismatchError,
)
from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.corona import (
    CoronaGeometry, compare_constants, constants_from_corona, corona_constants_oracle, corona_constants_paper,
    edge_corona, sub_join, vertex_corona,
)
from hyperspectra.generators import (
    complete_uniform, empty_uniform, example3_h1, loose_path, path_graph,
)
from hyperspectra.spectra.closed_forms import (
    edge_corona_polynomial, edge_corona_polynomial_spectrum, edge_corona_spectrum, oracle_constants_for,
    vertex_corona_spectrum,
)
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation
from hyperspectra.spectra.polynomials import charpoly_exact


def test_sub_join_adds_crossing_edges():
    h = sub_join(empty_uniform(3, 3), [1, 2], empty_uniform(3, 2), 3)
    assert h.n == 5
    # 3-подмножества {1,2,4,5}, задевающие обе стороны
    assert h.edge_count == 4
    assert all(not set(edge) <= {3} for edge, _ in h.edges)
    with pytest.raises(EmptyVertexSetError):
        sub_join(empty_uniform(3, 3), [], empty_uniform(3, 2), 3)


def test_vertex_corona_of_k34_with_single_vertices():
    h = vertex_corona(complete_uniform(3, 4), 1, 4, [empty_uniform(3, 1)])
    assert h.n == 8
    assert h.edge_count == 28
    assert is_uniform(h) == 3


def test_vertex_corona_shape_errors():
    with pytest.raises(PartitionMismatchError):
        vertex_corona(complete_uniform(3, 4), 3, 1, [empty_uniform(3, 1)] * 3)
    with pytest.raises(CountMismatchError):
        vertex_corona(complete_uniform(3, 4), 2, 2, [empty_uniform(3, 1)])
    with pytest.raises(ArityError):
        vertex_corona(complete_uniform(3, 4), 4, 1, [path_graph(2)] * 4)


def test_edge_corona_shape():
    h = edge_corona(complete_uniform(3, 4), [empty_uniform(3, 2)] * 4)
    assert h.n == 12
    assert is_uniform(h) == 3
    with pytest.raises(CountMismatchError):
        edge_corona(complete_uniform(3, 4), [empty_uniform(3, 2)] * 3)


# --- Константы ---

def test_vertex_constants_oracle():
    constants = corona_constants_oracle(CoronaGeometry.for_vertex(3, 1, 4, 1))
    assert (constants.a, constants.b) == (2, Fraction(3, 2))
    assert constants.vacuous == frozenset({"c"})


def test_vertex_constants_from_built_corona_agree_with_oracle():
    h0 = complete_uniform(3, 4)
    members = [empty_uniform(3, 1)]
    read = oracle_constants_for("vertex", h0, members, p=4)
    canonical = corona_constants_oracle(CoronaGeometry.for_vertex(3, 1, 4, 1))
    assert (read.a, read.b) == (canonical.a, canonical.b)


def test_edge_constants_oracle():
    h0 = complete_uniform(3, 4)
    constants = corona_constants_oracle(CoronaGeometry.for_edge(3, h0, 2))
    assert constants.a == 1
    assert 1 + 2 * constants.a == 3
    assert constants.b == constants.c == Fraction(3, 2)
    assert constants.rho(Fraction(0), 2) == Fraction(3, 2)
    read = oracle_constants_for("edge", h0, [empty_uniform(3, 2)] * 4)
    assert (read.a, read.b, read.c) == (constants.a, constants.b, constants.c)


def test_printed_edge_constants_differ_from_oracle():
    geometry = CoronaGeometry.for_edge(3, complete_uniform(3, 4), 2)
    paper = corona_constants_paper(geometry)
    assert (paper.a, paper.b, paper.c) == (2, 2, 3)
    rows = {row.name: row for row in compare_constants(corona_constants_oracle(geometry), paper)}
    assert not any(row.match for row in rows.values())
    assert rows["b"].oracle == "3/2" and rows["b"].paper == "2"


def test_vacuous_constant_always_matches():
    geometry = CoronaGeometry.for_vertex(3, 1, 4, 1)
    rows = {row.name: row for row in compare_constants(corona_constants_oracle(geometry),
                                                        corona_constants_paper(geometry))}
    assert rows["c"].vacuous and rows["c"].match


def test_constants_read_from_built_corona():
    h0 = complete_uniform(3, 4)
    corona = vertex_corona(h0, 1, 4, [empty_uniform(3, 1)])
    constants = constants_from_corona("vertex", h0, [empty_uniform(3, 1)], corona, p=4)
    assert constants.provenance == "oracle"
    assert (constants.a, constants.b) == (2, Fraction(3, 2))


# --- Спектры корон ---

@pytest.mark.parametrize("h0, member, p, method", [
    (complete_uniform(3, 3), empty_uniform(3, 2), 1, "cor3"),
    (complete_uniform(3, 4), empty_uniform(3, 1), 4, "cor4"),
    (complete_uniform(3, 4), empty_uniform(3, 2), 2, "reduced"),
    (example3_h1(), empty_uniform(3, 2), 2, "reduced"),
    (loose_path(3, 1, 2), complete_uniform(3, 3), 1, "cor3"),
])
def test_vertex_corona_spectrum(h0, member, p, method):
    k = h0.n // p
    members = [member] * k
    predicted = vertex_corona_spectrum(h0, members, p, method=method).values()
    observed = hypergraph_spectrum(vertex_corona(h0, k, p, members))
    assert max_deviation(predicted, observed) < 1e-8


def test_vertex_corona_auto_method_matches_reduced():
    h0 = complete_uniform(3, 4)
    members = [empty_uniform(3, 1)]
    auto = vertex_corona_spectrum(h0, members, 4).values()
    reduced = vertex_corona_spectrum(h0, members, 4, method="reduced").values()
    assert max_deviation(auto, reduced) < 1e-8


def test_cor4_needs_regular_base():
    with pytest.raises(HypothesisViolatedError):
        vertex_corona_spectrum(loose_path(3, 1, 2), [empty_uniform(3, 1)], 5, method="cor4")


def test_cor4_extreme_eigenvalues_of_k34_corona():
    # a = 2, b = 3/2: связь базы с n копиями даёт 12 и -3
    predicted = sorted(vertex_corona_spectrum(complete_uniform(3, 4), [empty_uniform(3, 1)], 4, method="cor4").values())
    assert predicted == pytest.approx([-3, -3, -3, -3, 0, 0, 0, 12], abs=1e-9)


def test_edge_corona_spectrum_regular_base():
    h0 = complete_uniform(3, 4)
    members = [empty_uniform(3, 2)] * 4
    predicted = edge_corona_spectrum(h0, members).values()
    assert max_deviation(predicted, hypergraph_spectrum(edge_corona(h0, members))) < 1e-8


def test_edge_corona_fewer_edges_than_vertices():
    # k < n: n - k копий rho сокращаются
    h0 = complete_uniform(3, 3)
    members = [empty_uniform(3, 2)]
    predicted = edge_corona_spectrum(h0, members).values()
    assert max_deviation(predicted, hypergraph_spectrum(edge_corona(h0, members))) < 1e-8


def test_edge_corona_polynomial_irregular_base():
    h0 = loose_path(3, 1, 2)
    members = [empty_uniform(3, 2)] * 2
    corona = edge_corona(h0, members)
    predicted = edge_corona_polynomial_spectrum(h0, members).values()
    assert max_deviation(predicted, hypergraph_spectrum(corona)) < 1e-8
    poly = edge_corona_polynomial(h0, members)
    assert poly.degree == 2 * h0.n + (h0.edge_count - h0.n)
    assert charpoly_exact(corona.adjacency).divmod(poly.monic())[1].is_zero()


def test_edge_corona_needs_regular_members():
    with pytest.raises(HypothesisViolatedError):
        edge_corona_spectrum(complete_uniform(3, 3), [loose_path(3, 1, 2)])
