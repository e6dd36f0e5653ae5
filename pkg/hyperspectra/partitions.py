"""
Равномерные (equitable) разбиения: проверка, фактор-матрица, грубейшее измельчение и орбиты.
Все сравнения сумм по строкам точные.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import MalformedPartitionError, NotEquitableError
from hyperspectra.core.guards import SizeGuard
from hyperspectra.core.hypergraph import Hypergraph, iter_isomorphisms, vertex_invariant
from hyperspectra.core.rational import RationalMatrix
from hyperspectra.spectra.eigen import jacobi_eigh

logger = logging.getLogger("hyperspectra")


@dataclass(frozen=True)
class Partition:
    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]], n: Optional[int] = None) -> "Partition":
        built = [tuple(sorted(set(cell))) for cell in cells]
        if any(not cell for cell in built):
            raise MalformedPartitionError("Partition cells must be nonempty")
        flat = [v for cell in built for v in cell]
        if len(flat) != len(set(flat)):
            raise MalformedPartitionError("Partition cells overlap")
        if n is not None and sorted(flat) != list(range(1, n + 1)):
            raise MalformedPartitionError(f"Partition does not cover 1..{n}")
        return cls(tuple(sorted(built, key=lambda cell: cell[0])))

    @classmethod
    def single_cell(cls, n: int) -> "Partition":
        return cls((tuple(range(1, n + 1)),))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(1, n + 1)))

    @property
    def k(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> List[int]:
        return [len(cell) for cell in self.cells]

    def cell_index(self) -> Dict[int, int]:
        return {v: idx for idx, cell in enumerate(self.cells) for v in cell}

    def as_lists(self) -> List[List[int]]:
        return [list(cell) for cell in self.cells]


@dataclass(frozen=True)
class EquitabilityCheck:
    equitable: bool
    # (p, q, i, i'): вершины i, i' из ячейки p с разными суммами по ячейке q (ячейки с 1)
    witness: Optional[Tuple[int, int, int, int]] = None

    def __bool__(self) -> bool:
        return self.equitable


@dataclass(frozen=True)
class QuotientResult:
    B: RationalMatrix
    partition: Partition
    n: int

    @property
    def k(self) -> int:
        return self.partition.k


def _row_sum(adjacency: RationalMatrix, i: int, cell: Sequence[int]) -> Fraction:
    row = adjacency.rows[i - 1]
    return sum((row[j - 1] for j in cell), Fraction(0))


def _check_partition(h: Hypergraph, partition: Partition):
    flat = sorted(v for cell in partition.cells for v in cell)
    if flat != list(h.vertices):
        raise MalformedPartitionError(f"Partition does not cover the {h.n} vertices exactly")


def is_equitable(h: Hypergraph, partition: Partition) -> EquitabilityCheck:
    _check_partition(h, partition)
    adjacency = h.adjacency
    for p, cell_p in enumerate(partition.cells, start=1):
        for q, cell_q in enumerate(partition.cells, start=1):
            first = _row_sum(adjacency, cell_p[0], cell_q)
            for i in cell_p[1:]:
                if _row_sum(adjacency, i, cell_q) != first:
                    return EquitabilityCheck(False, (p, q, cell_p[0], i))
    return EquitabilityCheck(True)


def characteristic_matrix(partition: Partition, n: int) -> RationalMatrix:
    index = partition.cell_index()
    return RationalMatrix.from_rows(
        [[int(index[v] == c) for c in range(partition.k)] for v in range(1, n + 1)]
    )


def quotient_matrix(h: Hypergraph, partition: Partition) -> QuotientResult:
    check = is_equitable(h, partition)
    if not check:
        raise NotEquitableError(f"Partition is not equitable, witness (p, q, i, i') = {check.witness}")
    adjacency = h.adjacency
    b = RationalMatrix.from_rows(
        [[_row_sum(adjacency, cell_p[0], cell_q) for cell_q in partition.cells] for cell_p in partition.cells]
    )
    p_matrix = characteristic_matrix(partition, h.n)
    if adjacency @ p_matrix != p_matrix @ b:
        raise NotEquitableError("A P != P B for the quotient matrix")
    return QuotientResult(b, partition, h.n)


def quotient_spectrum(b: RationalMatrix, cell_sizes: Sequence[int]) -> List[float]:
    """
    Спектр фактор-матрицы. Для симметричной A выполняется n_p B_pq = n_q B_qp,
    поэтому N^{1/2} B N^{-1/2} симметрична и подходит для метода Якоби.
    """
    k = b.order
    roots = np.sqrt(np.asarray(cell_sizes, dtype=float))
    dense = b.to_numpy()
    symmetric = dense * roots[:, None] / roots[None, :]
    values, _ = jacobi_eigh((symmetric + symmetric.T) / 2 if k else symmetric)
    return values.tolist()


def coarsest_equitable_partition(h: Hypergraph, seed: Optional[Partition] = None) -> Partition:
    """Итеративное расщепление ячеек по точным сигнатурам сумм строк до стабилизации."""
    partition = seed or Partition.single_cell(h.n)
    _check_partition(h, partition)
    adjacency = h.adjacency
    rounds = 0
    while True:
        rounds += 1
        index = partition.cell_index()
        groups: Dict[Tuple, List[int]] = {}
        for v in h.vertices:
            signature = (index[v],) + tuple(_row_sum(adjacency, v, cell) for cell in partition.cells)
            groups.setdefault(signature, []).append(v)
        refined = Partition.of(groups.values())
        if refined.k == partition.k:
            logger.debug(f"Измельчение: {rounds} проходов, {refined.k} ячеек")
            return refined
        partition = refined


def orbit_partition(h: Hypergraph) -> Partition:
    """Орбиты полной группы автоморфизмов (перебор, n <= 8)."""
    SizeGuard.check_order(h.n, settings.ORBIT_MAX_N, "orbit_partition")
    parent = {v: v for v in h.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    invariants = {v: vertex_invariant(h, v) for v in h.vertices}
    for v in h.vertices:
        for u in h.vertices:
            if u <= v or invariants[u] != invariants[v] or find(u) == find(v):
                continue
            automorphism = next(iter_isomorphisms(h, h, fixed={v: u}), None)
            if automorphism is not None:
                for source, image in automorphism.items():
                    union(source, image)

    orbits: Dict[int, List[int]] = {}
    for v in h.vertices:
        orbits.setdefault(find(v), []).append(v)
    return Partition.of(orbits.values())


def refines(fine: Partition, coarse: Partition) -> bool:
    """Каждая ячейка fine лежит в некоторой ячейке coarse."""
    index = coarse.cell_index()
    return all(len({index[v] for v in cell}) == 1 for cell in fine.cells)


def iter_set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in iter_set_partitions(rest):
        for idx in range(len(smaller)):
            yield smaller[:idx] + [[first] + smaller[idx]] + smaller[idx + 1:]
        yield [[first]] + smaller
