from fractions import Fraction

import pytest

from hyperspectra.core.exceptions import (
    ArityError, BadCardinalitySetError, InsufficientVerticesError, NotRegularError,
)
from hyperspectra.core.hypergraph import is_uniform
from hyperspectra.generators import complete_graph, complete_uniform, empty_uniform, loose_path, path_graph
from hyperspectra.joins import (
    BackbonePlan, JoinFamily, binom, block_formula_adjacency, coefficient_sums, join_coeff_oracle,
    join_coeff_pp, join_coeff_pq, join_on_backbone, join_on_backbone_nonuniform, join_set,
    join_set_nonuniform, predicted_join_spectrum, predicted_shifted_eigenvalues, quotient_from_regular_join,
)
from hyperspectra.partitions import quotient_matrix
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation


def test_binom_outside_range_is_zero():
    assert binom(4, 2) == 6
    assert binom(2, 3) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0


def test_coefficients_two_parts():
    assert join_coeff_pp([2, 2], 3, 1) == 1
    assert join_coeff_pq([2, 2], 3, 1, 2) == 1


def test_coefficients_three_singletons():
    assert join_coeff_pq([1, 1, 1], 3, 1, 2) == Fraction(1, 2)


@pytest.mark.parametrize("sizes, m", [([2, 3], 3), ([2, 2, 3], 4), ([3, 1, 2], 3), ([2, 2], 4), ([4, 3], 5)])
def test_closed_coefficients_match_oracle(sizes, m):
    for p in range(1, len(sizes) + 1):
        if sizes[p - 1] >= 2:
            assert join_coeff_pp(sizes, m, p) == join_coeff_oracle(sizes, m, p)
        for q in range(p + 1, len(sizes) + 1):
            assert join_coeff_pq(sizes, m, p, q) == join_coeff_oracle(sizes, m, p, q)


def test_coefficient_argument_errors():
    with pytest.raises(ArityError):
        join_coeff_pp([1, 2], 3, 1)
    with pytest.raises(ArityError):
        join_coeff_pq([1, 2], 3, 1, 1)
    with pytest.raises(ArityError):
        join_coeff_pq([1, 1, 1, 1], 3, 1, 2)


# --- Соединение семейства ---

def test_join_of_two_empty_pairs_is_k34():
    h = join_set(JoinFamily((empty_uniform(3, 2), empty_uniform(3, 2)), m=3))
    assert h.edges == complete_uniform(3, 4).edges


def test_join_keeps_member_edges_and_weight():
    family = JoinFamily((complete_uniform(3, 3), empty_uniform(3, 2)), m=3, ws=Fraction(1, 2))
    h = join_set(family)
    assert h.edge_weights[(1, 2, 3)] == 1
    assert h.edge_weights[(1, 2, 4)] == Fraction(1, 2)
    assert h.edge_count == 1 + 9


def test_join_block_formula_matches_adjacency():
    family = JoinFamily((complete_uniform(3, 3), empty_uniform(3, 2), complete_uniform(3, 4)), m=3)
    h = join_set(family)
    assert block_formula_adjacency(family.as_plan(), 3) == h.adjacency


def test_join_spectrum_of_regular_members():
    family = JoinFamily((empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 4)), m=3)
    h = join_set(family)
    predicted = predicted_join_spectrum(family).values()
    assert max_deviation(predicted, hypergraph_spectrum(h)) < 1e-8


def test_join_validation():
    with pytest.raises(ArityError):
        join_set(JoinFamily((empty_uniform(3, 3),), m=3))
    with pytest.raises(ArityError):
        join_set(JoinFamily((empty_uniform(2, 1),) * 3, m=2))
    with pytest.raises(InsufficientVerticesError):
        join_set(JoinFamily((empty_uniform(4, 1), empty_uniform(4, 2)), m=4))
    with pytest.raises(ArityError):
        join_set(JoinFamily((loose_path(3, 1, 1), path_graph(3)), m=3))


# --- Соединение по остову ---

def test_backbone_k33_with_empty_participants():
    plan = BackbonePlan(complete_uniform(3, 3), (empty_uniform(3, 2), empty_uniform(3, 3), empty_uniform(3, 4)))
    h = join_on_backbone(plan, 3)
    assert h.n == 9
    assert h.edge_count == 24
    diag, off = coefficient_sums(plan, 3)
    assert diag == [0, 0, 0]
    assert off[(1, 2)] == 2
    shifted = predicted_shifted_eigenvalues(plan, 3)
    assert len(shifted) == 1
    value, multiplicity = shifted[0]
    assert value == pytest.approx(0.0, abs=1e-12)
    assert multiplicity == 6


def test_backbone_path_quotient_and_spectrum():
    plan = BackbonePlan(path_graph(3), (complete_uniform(3, 3), empty_uniform(3, 2), complete_uniform(3, 4)))
    h = join_on_backbone(plan, 3)
    assert block_formula_adjacency(plan, 3) == h.adjacency
    assert quotient_matrix(h, plan.partition()).B == quotient_from_regular_join(plan, 3)
    assert max_deviation(predicted_join_spectrum(plan, 3).values(), hypergraph_spectrum(h)) < 1e-8


def test_backbone_weights_scale_new_edges():
    backbone = complete_graph(2, "3")
    plan = BackbonePlan(backbone, (empty_uniform(3, 2), empty_uniform(3, 2)))
    h = join_on_backbone(plan, 3)
    assert {w for _, w in h.edges} == {Fraction(3)}


def test_regular_prediction_needs_regular_participants():
    plan = BackbonePlan(path_graph(2), (loose_path(3, 1, 2), empty_uniform(3, 2)))
    with pytest.raises(NotRegularError):
        predicted_shifted_eigenvalues(plan, 3)


def test_backbone_participant_count():
    with pytest.raises(ArityError):
        join_on_backbone(BackbonePlan(path_graph(3), (empty_uniform(3, 2),) * 2), 3)


# --- Неоднородные соединения ---

def test_nonuniform_join_counts():
    family = JoinFamily((empty_uniform(2, 2), empty_uniform(2, 2)), cardinalities=frozenset({2, 3}),
                        cardinality_weights={2: Fraction(1), 3: Fraction(1)})
    h = join_set_nonuniform(family)
    assert h.edge_count == 8
    assert is_uniform(h) is None


def test_nonuniform_block_formula():
    weights = {2: Fraction(1), 3: Fraction(1, 2)}
    plan = BackbonePlan(complete_graph(2), (empty_uniform(2, 2), complete_graph(3)),
                        (frozenset({2, 3}),), weights)
    h = join_on_backbone_nonuniform(plan)
    assert block_formula_adjacency(plan) == h.adjacency
    assert max_deviation(predicted_join_spectrum(plan).values(), hypergraph_spectrum(h)) < 1e-8


def test_nonuniform_validation():
    plan = BackbonePlan(complete_graph(2), (empty_uniform(2, 1), empty_uniform(2, 1)),
                        (frozenset({2, 3}),), {2: Fraction(1), 3: Fraction(1)})
    with pytest.raises(BadCardinalitySetError):
        join_on_backbone_nonuniform(plan)
    missing_weight = BackbonePlan(complete_graph(2), (empty_uniform(2, 2), empty_uniform(2, 2)),
                                  (frozenset({2, 3}),), {2: Fraction(1)})
    with pytest.raises(BadCardinalitySetError):
        join_on_backbone_nonuniform(missing_weight)
    with pytest.raises(BadCardinalitySetError):
        join_set_nonuniform(JoinFamily((empty_uniform(2, 2),) * 2))
