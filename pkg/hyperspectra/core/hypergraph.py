"""
Модель взвешенного гиперграфа и его матрица смежности
A_ij = sum_{e ∋ i,j} w_e / (|e| - 1).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .config import settings
from .exceptions import (
    EmptyEdgeError, VertexOutOfRangeError, NegativeWeightError, DuplicateEdgeError, RepeatedVertexError,
    SingletonEdgeError, EmptyVertexSetError, TooSmallError,
)
from .guards import SizeGuard
from .rational import RationalMatrix, RationalLike, parse_rational

logger = logging.getLogger("hyperspectra")

Edge = Tuple[int, ...]
WeightedEdge = Tuple[Edge, Fraction]


@dataclass(frozen=True)
class Hypergraph:
    """
    Гиперграф на вершинах 1..n.

    Рёбра хранятся отсортированными (вершины по возрастанию, список лексикографически).
    `uniformity`: объявленная однородность для графов без рёбер (\\bar{K}^m_n).
    """
    n: int
    edges: Tuple[WeightedEdge, ...] = ()
    label: Optional[str] = None
    uniformity: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise TooSmallError(f"Hypergraph needs at least one vertex, got n={self.n}")
        seen = set()
        normalized: List[WeightedEdge] = []
        for vertices, weight in self.edges:
            vertices = tuple(int(v) for v in vertices)
            edge = tuple(sorted(set(vertices)))
            if not edge:
                raise EmptyEdgeError("Edges must be nonempty")
            if len(edge) != len(vertices):
                raise RepeatedVertexError(f"Edge {tuple(vertices)} repeats a vertex")
            if edge[0] < 1 or edge[-1] > self.n:
                raise VertexOutOfRangeError(f"Edge {edge} leaves the vertex range 1..{self.n}")
            weight = parse_rational(weight)
            if weight < 0:
                raise NegativeWeightError(f"Edge {edge} has negative weight {weight}")
            if edge in seen:
                raise DuplicateEdgeError(f"Edge {edge} given twice")
            seen.add(edge)
            normalized.append((edge, weight))
        normalized.sort(key=lambda item: item[0])
        object.__setattr__(self, "edges", tuple(normalized))

    # --- Базовые свойства ---

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_weights(self) -> Dict[Edge, Fraction]:
        return dict(self.edges)

    @cached_property
    def incidence(self) -> Dict[int, Tuple[WeightedEdge, ...]]:
        table: Dict[int, List[WeightedEdge]] = {v: [] for v in self.vertices}
        for edge, weight in self.edges:
            for v in edge:
                table[v].append((edge, weight))
        return {v: tuple(items) for v, items in table.items()}

    def is_unweighted(self) -> bool:
        return all(w == 1 for _, w in self.edges)

    def check_vertex(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise VertexOutOfRangeError(f"Vertex {i} not in 1..{self.n}")
        return i

    def degree(self, i: int) -> int:
        return len(self.incidence[self.check_vertex(i)])

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted(len(self.incidence[v]) for v in self.vertices))

    @cached_property
    def adjacency(self) -> RationalMatrix:
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for edge, weight in self.edges:
            if len(edge) == 1:
                raise SingletonEdgeError(f"Edge {edge} has one vertex; |e|-1 = 0")
            share = weight / (len(edge) - 1)
            for a in range(len(edge)):
                for b in range(a + 1, len(edge)):
                    i, j = edge[a] - 1, edge[b] - 1
                    rows[i][j] += share
                    rows[j][i] += share
        return RationalMatrix.from_rows(rows)

    def relabel(self, mapping: Mapping[int, int], label: Optional[str] = None) -> "Hypergraph":
        """Образ под биекцией вершин mapping: старый номер -> новый."""
        return Hypergraph(
            self.n,
            tuple((tuple(mapping[v] for v in edge), w) for edge, w in self.edges),
            label=label if label is not None else self.label,
            uniformity=self.uniformity,
        )


def new_hypergraph(n: int, edges: Iterable[Tuple[Iterable[int], RationalLike]],
                   label: Optional[str] = None, uniformity: Optional[int] = None) -> Hypergraph:
    return Hypergraph(n, tuple((tuple(e), w) for e, w in edges), label=label, uniformity=uniformity)


def adjacency_matrix(h: Hypergraph) -> RationalMatrix:
    return h.adjacency


def valency(h: Hypergraph, i: int) -> Fraction:
    """d_i = сумма весов рёбер, содержащих i."""
    return sum((w for _, w in h.incidence[h.check_vertex(i)]), Fraction(0))


def is_uniform(h: Hypergraph) -> Optional[int]:
    sizes = {len(edge) for edge, _ in h.edges}
    if not sizes:
        return h.uniformity
    if len(sizes) == 1:
        size = sizes.pop()
        if h.uniformity is not None and h.uniformity != size:
            return None
        return size
    return None


def is_regular(h: Hypergraph) -> Optional[Fraction]:
    values = {valency(h, v) for v in h.vertices}
    return values.pop() if len(values) == 1 else None


def codegree(h: Hypergraph, i: int, j: int) -> int:
    h.check_vertex(i)
    h.check_vertex(j)
    if i == j:
        raise VertexOutOfRangeError("codegree needs two distinct vertices")
    return sum(1 for edge, _ in h.incidence[i] if j in edge)


def to_networkx(h: Hypergraph) -> nx.Graph:
    """2-секция гиперграфа: вершины, смежные при общем ребре (включая рёбра веса 0)."""
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    for edge, _ in h.edges:
        graph.add_edges_from(zip(edge, edge[1:]))
    return graph


def is_connected(h: Hypergraph) -> bool:
    return nx.is_connected(to_networkx(h))


def induced_subhypergraph(h: Hypergraph, subset: Iterable[int]) -> Tuple[Hypergraph, Dict[int, int]]:
    """Подгиперграф на V' с перенумерацией 1..|V'|; возвращает и отображение старый -> новый."""
    kept = sorted(set(subset))
    if not kept:
        raise EmptyVertexSetError("Induced subhypergraph needs a nonempty vertex set")
    for v in kept:
        h.check_vertex(v)
    mapping = {v: idx for idx, v in enumerate(kept, start=1)}
    inside = set(kept)
    edges = tuple((tuple(mapping[v] for v in edge), w) for edge, w in h.edges if inside.issuperset(edge))
    return Hypergraph(len(kept), edges, label=h.label, uniformity=is_uniform(h)), mapping


# ==============================================================================
# Поиск изоморфизмов перебором с отсечениями
# ==============================================================================

def vertex_invariant(h: Hypergraph, v: int) -> Tuple:
    """(валентность, отсортированный профиль (|e|, w) инцидентных рёбер)"""
    profile = tuple(sorted((len(edge), w) for edge, w in h.incidence[v]))
    return valency(h, v), profile


def iter_isomorphisms(h1: Hypergraph, h2: Hypergraph,
                      fixed: Optional[Mapping[int, int]] = None) -> Iterator[Dict[int, int]]:
    """
    Все биекции V(h1) -> V(h2), переводящие взвешенные рёбра h1 в рёбра h2.
    fixed задаёт уже назначенные образы.
    """
    if h1.n != h2.n or h1.edge_count != h2.edge_count:
        return
    if sorted(w for _, w in h1.edges) != sorted(w for _, w in h2.edges):
        return

    inv1 = {v: vertex_invariant(h1, v) for v in h1.vertices}
    inv2 = {v: vertex_invariant(h2, v) for v in h2.vertices}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return

    fixed = dict(fixed or {})
    for v, image in fixed.items():
        if inv1[v] != inv2[image]:
            return

    order = list(fixed) + [v for v in h1.vertices if v not in fixed]
    position = {v: idx for idx, v in enumerate(order)}
    # Рёбра проверяются, когда назначена их последняя (в порядке перебора) вершина
    closing: Dict[int, List[WeightedEdge]] = {v: [] for v in order}
    for edge, weight in h1.edges:
        last = max(edge, key=lambda u: position[u])
        closing[last].append((edge, weight))
    targets = h2.edge_weights

    mapping: Dict[int, int] = {}
    used = set()

    def consistent(v: int) -> bool:
        for edge, weight in closing[v]:
            image = tuple(sorted(mapping[u] for u in edge))
            if targets.get(image) != weight:
                return False
        return True

    def extend(depth: int) -> Iterator[Dict[int, int]]:
        if depth == len(order):
            yield dict(mapping)
            return
        v = order[depth]
        candidates = [fixed[v]] if v in fixed else [u for u in h2.vertices if inv2[u] == inv1[v]]
        for u in candidates:
            if u in used:
                continue
            mapping[v] = u
            used.add(u)
            if consistent(v):
                yield from extend(depth + 1)
            used.discard(u)
            del mapping[v]

    yield from extend(0)


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    SizeGuard.check_order(max(h1.n, h2.n), settings.ISO_MAX_N, "isomorphism search")
    found = next(iter_isomorphisms(h1, h2), None) is not None
    logger.debug(f"Изоморфизм {h1.label or 'H1'} ~ {h2.label or 'H2'}: {found}")
    return found
