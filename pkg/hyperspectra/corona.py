"""
Короны гиперграфов: подсоединение V'⊕H'', обобщённая вершинная корона и рёберная корона,
а также константы (a, b, c) блочной структуры их матриц смежности.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Literal, Optional, Sequence, Tuple

from hyperspectra.core.exceptions import (
    ArityError, CountMismatchError, EmptyVertexSetError, NonConstantBlockError, PartitionMismatchError,
)
from hyperspectra.core.hypergraph import Hypergraph, codegree, is_uniform
from hyperspectra.core.rational import format_rational
from hyperspectra.generators import complete_uniform, consecutive_blocks, crossing_subsets, empty_uniform
from hyperspectra.joins import binom
from hyperspectra.schemas import ConstantComparison

logger = logging.getLogger("hyperspectra")

CoronaKind = Literal["vertex", "edge"]


def _common_arity(hypergraphs: Iterable[Hypergraph], m: Optional[int] = None) -> int:
    for h in hypergraphs:
        arity = is_uniform(h)
        if arity is None:
            raise ArityError(f"{h.label or 'hypergraph'} is not uniform")
        if m is None:
            m = arity
        elif arity != m:
            raise ArityError(f"{h.label or 'hypergraph'} is {arity}-uniform, expected {m}")
    if m is None:
        raise ArityError("Cannot determine the arity")
    return m


def _shifted(h: Hypergraph, offset: int) -> List[Tuple[Tuple[int, ...], Fraction]]:
    return [(tuple(v + offset for v in edge), w) for edge, w in h.edges]


def sub_join(h: Hypergraph, subset: Iterable[int], other: Hypergraph, m: int) -> Hypergraph:
    """
    V'⊕H'': к H добавляется свежая копия H'' (вершины n+1..n+n'') и все m-подмножества
    V' ∪ V(H''), пересекающие обе стороны, с весом 1.
    """
    subset = sorted({h.check_vertex(v) for v in subset})
    if not subset:
        raise EmptyVertexSetError("sub_join needs a nonempty vertex set V'")
    _common_arity((h, other), m)
    copy = tuple(range(h.n + 1, h.n + other.n + 1))
    edges = list(h.edges) + _shifted(other, h.n)
    edges.extend((e, Fraction(1)) for e in crossing_subsets([subset, copy], m))
    return Hypergraph(h.n + other.n, tuple(edges), label="sub-join", uniformity=m)


def vertex_corona(h0: Hypergraph, k: int, p: int, members: Sequence[Hypergraph]) -> Hypergraph:
    """
    H_0 ∘^k_p H_i: V_0 делится на k ячеек по p подряд идущих вершин, к ячейке i
    подсоединяются p копий H_i. Порядок вершин: V_0, затем копии в порядке (i, j).
    """
    if k < 1 or p < 1 or h0.n != k * p:
        raise PartitionMismatchError(f"|V_0| = {h0.n} is not k*p = {k}*{p}")
    if len(members) != k:
        raise CountMismatchError(f"Vertex corona with k={k} cells needs {k} members, got {len(members)}")
    m = _common_arity([h0, *members])
    cells = consecutive_blocks([p] * k)
    edges = list(h0.edges)
    offset = h0.n
    for cell, member in zip(cells, members):
        for _ in range(p):
            copy = tuple(range(offset + 1, offset + member.n + 1))
            edges.extend(_shifted(member, offset))
            edges.extend((e, Fraction(1)) for e in crossing_subsets([cell, copy], m))
            offset += member.n
    logger.debug(f"Вершинная корона: k={k}, p={p}, {offset} вершин, {len(edges)} рёбер")
    return Hypergraph(offset, tuple(edges), label=f"vertex-corona(k={k},p={p})", uniformity=m)


def edge_corona(h0: Hypergraph, members: Sequence[Hypergraph]) -> Hypergraph:
    """Рёберная корона: для каждого ребра e_i базы строится e_i ⊕ H_i (копии идут в порядке рёбер)."""
    if len(members) != h0.edge_count:
        raise CountMismatchError(f"Edge corona needs {h0.edge_count} members, got {len(members)}")
    m = _common_arity([h0, *members])
    edges = list(h0.edges)
    offset = h0.n
    for (base_edge, _), member in zip(h0.edges, members):
        copy = tuple(range(offset + 1, offset + member.n + 1))
        edges.extend(_shifted(member, offset))
        edges.extend((e, Fraction(1)) for e in crossing_subsets([base_edge, copy], m))
        offset += member.n
    return Hypergraph(offset, tuple(edges), label="edge-corona", uniformity=m)


# ==============================================================================
# Константы короны
# ==============================================================================

@dataclass(frozen=True)
class CoronaGeometry:
    """
    kind="vertex": n = k*p вершин базы в k ячейках по p; kind="edge": база на n вершинах с k рёбрами
    (p не используется). n1 равно размеру каждого присоединяемого гиперграфа.
    """
    kind: CoronaKind
    m: int
    n: int
    n1: int
    k: int = 1
    p: int = 1

    @classmethod
    def for_vertex(cls, m: int, k: int, p: int, n1: int) -> "CoronaGeometry":
        return cls("vertex", m, k * p, n1, k, p)

    @classmethod
    def for_edge(cls, m: int, h0: Hypergraph, n1: int) -> "CoronaGeometry":
        return cls("edge", m, h0.n, n1, h0.edge_count, 1)


@dataclass(frozen=True)
class CoronaConstants:
    """
    Вершинная корона: a: приращение между вершинами одной ячейки; b: база-копия; c: внутри копии.
    Рёберная корона: a равно приращению на одно общее ребро базы; базовый блок равен (1 + (m-1)a) A_{H_0}.
    """
    a: Fraction
    b: Fraction
    c: Fraction
    provenance: Literal["oracle", "formula"] = "oracle"
    vacuous: FrozenSet[str] = field(default_factory=frozenset)

    def rho(self, r1: Fraction, n1: int) -> Fraction:
        """r_1 + (n_1 - 1)c: собственное значение копии на постоянном векторе."""
        return r1 + (n1 - 1) * self.c


def _constant(values: Iterable[Fraction], name: str) -> Optional[Fraction]:
    seen = set(values)
    if len(seen) > 1:
        raise NonConstantBlockError(f"Block for constant {name} is not constant: {sorted(seen)[:4]}")
    return next(iter(seen), None)


def constants_from_corona(kind: CoronaKind, h0: Hypergraph, members: Sequence[Hypergraph],
                          corona: Hypergraph, p: int = 1) -> CoronaConstants:
    """Константы, считанные с матрицы смежности готовой короны (проверка постоянства блоков)."""
    adjacency = corona.adjacency
    base = h0.adjacency
    if kind == "vertex":
        k = len(members)
        cells = consecutive_blocks([p] * k)
        copies: List[Tuple[int, Tuple[int, ...]]] = []
        offset = h0.n
        for idx, member in enumerate(members):
            for _ in range(p):
                copies.append((idx, tuple(range(offset + 1, offset + member.n + 1))))
                offset += member.n
        a = _constant((adjacency[u - 1, v - 1] - base[u - 1, v - 1]
                       for cell in cells for u in cell for v in cell if u < v), "a")
        b = _constant((adjacency[u - 1, x - 1]
                       for idx, copy in copies for u in cells[idx] for x in copy), "b")
        foreign = _constant((adjacency[u - 1, x - 1]
                             for idx, copy in copies for j, cell in enumerate(cells) if j != idx
                             for u in cell for x in copy), "b (foreign cells)")
        if foreign not in (None, 0):
            raise NonConstantBlockError("Base vertices are adjacent to copies of other cells")
    else:
        copies = []
        offset = h0.n
        for idx, member in enumerate(members):
            copies.append((idx, tuple(range(offset + 1, offset + member.n + 1))))
            offset += member.n
        increments = []
        for u in h0.vertices:
            for v in range(u + 1, h0.n + 1):
                shared = codegree(h0, u, v)
                extra = adjacency[u - 1, v - 1] - base[u - 1, v - 1]
                if shared:
                    increments.append(extra / shared)
                elif extra:
                    raise NonConstantBlockError(f"Base vertices {u}, {v} share no edge but gained {extra}")
        a = _constant(increments, "a")
        b = _constant((adjacency[u - 1, x - 1]
                       for idx, copy in copies for u in h0.edges[idx][0] for x in copy), "b")
    c = _constant((adjacency[x - 1, y - 1] - members[idx].adjacency[x - copy[0], y - copy[0]]
                   for idx, copy in copies for x in copy for y in copy if x < y), "c")
    vacuous = frozenset(name for name, value in (("a", a), ("b", b), ("c", c)) if value is None)
    return CoronaConstants(a=a or Fraction(0), b=b or Fraction(0), c=c or Fraction(0),
                           provenance="oracle", vacuous=vacuous)


def corona_constants_oracle(geometry: CoronaGeometry) -> CoronaConstants:
    """Константы по каноническому экземпляру: пустые база и присоединяемые гиперграфы нужной формы."""
    m, n1 = geometry.m, geometry.n1
    member = empty_uniform(m, n1)
    if geometry.kind == "vertex":
        h0 = empty_uniform(m, geometry.p)
        corona = vertex_corona(h0, 1, geometry.p, [member])
        return constants_from_corona("vertex", h0, [member], corona, p=geometry.p)
    h0 = complete_uniform(m, m)
    corona = edge_corona(h0, [member])
    return constants_from_corona("edge", h0, [member], corona)


def corona_constants_paper(geometry: CoronaGeometry) -> CoronaConstants:
    """Напечатанные формулы, вычисленные как есть (биномиальный коэффициент вне области равен 0)."""
    m, n, n1, p = geometry.m, geometry.n, geometry.n1, geometry.p
    if geometry.kind == "vertex":
        a = Fraction(p, m - 1) * (binom(n + n1 - 2, m - 2) - binom(n, m - 2))
        b = Fraction(binom(n + n1 - 2, m - 1))
        c = Fraction(binom(n + n1 - 2, m - 2) - binom(n1 - 2, m - 2), m - 1)
    else:
        a = Fraction(binom(m + n1 - 2, m - 2) - 1)
        b = Fraction(binom(n + n1 - 2, m - 2), m - 1)
        c = Fraction(binom(m + n1 - 2, m - 2) - binom(n1 - 2, m - 2))
    return CoronaConstants(a=a, b=b, c=c, provenance="formula")


def compare_constants(oracle: CoronaConstants, paper: CoronaConstants) -> List[ConstantComparison]:
    rows = []
    for name in ("a", "b", "c"):
        ours, printed = getattr(oracle, name), getattr(paper, name)
        vacuous = name in oracle.vacuous
        rows.append(ConstantComparison(
            name=name, oracle=format_rational(ours), paper=format_rational(printed),
            match=vacuous or ours == printed, vacuous=vacuous,
        ))
    return rows
