import math
from fractions import Fraction

import pytest

from hyperspectra.core.exceptions import MalformedPartitionError, NotEquitableError, TooLargeError
from hyperspectra.core.rational import RationalMatrix
from hyperspectra.generators import complete_multipartite, complete_uniform, empty_uniform, loose_path
from hyperspectra.partitions import (
    Partition, characteristic_matrix, coarsest_equitable_partition, is_equitable, iter_set_partitions,
    orbit_partition, quotient_matrix, quotient_spectrum, refines,
)


def test_partition_validation():
    assert Partition.of([[3, 1], [2]], 3).cells == ((1, 3), (2,))
    with pytest.raises(MalformedPartitionError):
        Partition.of([[1, 2], [2, 3]])
    with pytest.raises(MalformedPartitionError):
        Partition.of([[1], []])
    with pytest.raises(MalformedPartitionError):
        Partition.of([[1, 2]], 3)


def test_loose_path_coarsest_partition_and_quotient():
    h = loose_path(3, 1, 2)
    partition = coarsest_equitable_partition(h)
    assert partition.as_lists() == [[1, 2, 4, 5], [3]]
    result = quotient_matrix(h, partition)
    assert result.B == RationalMatrix.from_rows([["1/2", "1/2"], [2, 0]])
    values = quotient_spectrum(result.B, partition.sizes)
    expected = sorted([(0.5 + math.sqrt(4.25)) / 2, (0.5 - math.sqrt(4.25)) / 2])
    assert values == pytest.approx(expected, abs=1e-12)


def test_non_equitable_partition_has_witness():
    h = loose_path(3, 1, 2)
    check = is_equitable(h, Partition.of([[1], [2, 3, 4, 5]]))
    assert not check
    # вершины 2 и 3 видят {1} одинаково, первой отличается 4
    assert check.witness == (2, 1, 2, 4)
    with pytest.raises(NotEquitableError):
        quotient_matrix(h, Partition.of([[1], [2, 3, 4, 5]]))


def test_partition_must_cover_vertices():
    with pytest.raises(MalformedPartitionError):
        is_equitable(loose_path(3, 1, 2), Partition.of([[1, 2, 3]]))


def test_multipartite_quotient():
    h = complete_multipartite(3, [2, 2, 2])
    partition = Partition.of([[1, 2], [3, 4], [5, 6]])
    b = quotient_matrix(h, partition).B
    assert b == RationalMatrix.from_rows([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
    assert quotient_spectrum(b, partition.sizes) == pytest.approx([-2.0, -2.0, 4.0], abs=1e-12)


def test_quotient_commutes_with_characteristic_matrix():
    h = complete_multipartite(3, [1, 2, 3])
    partition = Partition.of([[1], [2, 3], [4, 5, 6]])
    b = quotient_matrix(h, partition).B
    p = characteristic_matrix(partition, h.n)
    assert h.adjacency @ p == p @ b
    # n_p B_pq = n_q B_qp
    sizes = partition.sizes
    assert all(sizes[i] * b[i, j] == sizes[j] * b[j, i] for i in range(3) for j in range(3))


def test_regular_hypergraph_has_single_cell():
    h = complete_uniform(3, 5)
    partition = coarsest_equitable_partition(h)
    assert partition.k == 1
    assert quotient_matrix(h, partition).B == RationalMatrix.from_rows([[Fraction(6)]])


def test_seed_is_refined_not_merged():
    h = complete_uniform(3, 4)
    seed = Partition.of([[1, 2], [3, 4]])
    assert coarsest_equitable_partition(h, seed) == seed


def test_orbits_of_loose_path():
    h = loose_path(3, 1, 2)
    orbits = orbit_partition(h)
    assert orbits.as_lists() == [[1, 2, 4, 5], [3]]
    assert is_equitable(h, orbits)
    assert refines(orbits, coarsest_equitable_partition(h))


def test_orbits_of_example3(example3):
    h0, _ = example3
    orbits = orbit_partition(h0)
    assert is_equitable(h0, orbits)
    assert refines(orbits, coarsest_equitable_partition(h0))
    assert [7, 8] in orbits.as_lists()


def test_orbit_guard():
    with pytest.raises(TooLargeError):
        orbit_partition(empty_uniform(3, 9))


def test_refines():
    fine = Partition.of([[1], [2], [3, 4]])
    coarse = Partition.of([[1, 2], [3, 4]])
    assert refines(fine, coarse)
    assert not refines(coarse, fine)


def test_set_partitions_count():
    # числа Белла
    assert sum(1 for _ in iter_set_partitions([1, 2, 3, 4])) == 15
    assert list(iter_set_partitions([])) == [[]]
