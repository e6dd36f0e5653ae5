"""
Переключение (switching) в духе Годсила-МакКея для однородных гиперграфов,
сертификация коспектральности и семейства коспектральных пар через короны.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import (
    ArityError, BadSubsetSizeError, HypothesisViolatedError, MalformedPartitionError,
    NotRegularError, NotSwitchableError, SizeMismatchError, TooLargeError,
)
from hyperspectra.core.guards import SizeGuard
from hyperspectra.core.hypergraph import Hypergraph, is_isomorphic, is_regular, is_uniform
from hyperspectra.corona import vertex_corona
from hyperspectra.spectra.eigen import hypergraph_spectrum, max_deviation
from hyperspectra.spectra.polynomials import charpoly_exact

logger = logging.getLogger("hyperspectra")


@dataclass(frozen=True)
class SwitchingPartition:
    """Ячейки V_1..V_k чётного размера 2t и особая ячейка D из m-1 вершин."""
    cells: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]], d: Iterable[int]) -> "SwitchingPartition":
        return cls(tuple(tuple(sorted(cell)) for cell in cells), tuple(sorted(d)))


@dataclass(frozen=True)
class SwitchingCheck:
    ok: bool
    condition: Optional[int] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _validate_partition(h: Hypergraph, rho: SwitchingPartition) -> int:
    m = is_uniform(h)
    if m is None:
        raise ArityError("Switching needs a uniform hypergraph")
    if not h.is_unweighted():
        raise ArityError("Switching is defined for unweighted hypergraphs only")
    if len(rho.d) != m - 1:
        raise MalformedPartitionError(f"D must have m-1 = {m - 1} vertices, got {len(rho.d)}")
    covered = [v for cell in rho.cells for v in cell] + list(rho.d)
    if sorted(covered) != list(h.vertices):
        raise MalformedPartitionError("Cells and D must partition the vertex set exactly once")
    for cell in rho.cells:
        if not cell or len(cell) % 2:
            raise MalformedPartitionError(f"Cell {cell} must have even positive size")
    return m


def d_neighbourhood(h: Hypergraph, d: Sequence[int]) -> frozenset:
    """N(D) = {v : D ∪ {v} является ребром}"""
    dset = set(d)
    return frozenset(v for edge, _ in h.edges if dset <= set(edge) for v in edge if v not in dset)


def check_switching_partition(h: Hypergraph, rho: SwitchingPartition) -> SwitchingCheck:
    m = _validate_partition(h, rho)
    adjacency = h.adjacency
    sums = {}
    for p, cell_p in enumerate(rho.cells):
        for q, cell_q in enumerate(rho.cells):
            row_sums = {sum((adjacency[i - 1, l - 1] for l in cell_q), 0) for i in cell_p}
            if len(row_sums) != 1:
                return SwitchingCheck(False, 1, f"Rows of cell {p + 1} have different sums into cell {q + 1}")
            sums[(p, q)] = row_sums.pop()
    for (p, q), value in sums.items():
        if sums[(q, p)] != value:
            return SwitchingCheck(False, 1, f"B'[{p + 1},{q + 1}] = {value} differs from B'[{q + 1},{p + 1}]")
    dset = set(rho.d)
    for edge, _ in h.edges:
        overlap = len(dset.intersection(edge))
        if overlap not in (0, m - 1):
            return SwitchingCheck(False, 2, f"Edge {edge} meets D in {overlap} vertices")
    neighbours = d_neighbourhood(h, rho.d)
    for p, cell in enumerate(rho.cells):
        t = len(cell) // 2
        hits = len(neighbours.intersection(cell))
        if hits not in (0, t, 2 * t):
            return SwitchingCheck(False, 2, f"|N(D) ∩ V_{p + 1}| = {hits}, expected 0, {t} or {2 * t}")
    return SwitchingCheck(True)


def gm_switch(h: Hypergraph, rho: SwitchingPartition) -> Hypergraph:
    """В ячейках с |N(D) ∩ V_p| = t рёбра D∪{v} заменяются на дополнительную половину."""
    check = check_switching_partition(h, rho)
    if not check:
        raise NotSwitchableError(f"Condition {check.condition} fails: {check.message}")
    neighbours = d_neighbourhood(h, rho.d)
    removed, added = set(), []
    for cell in rho.cells:
        inside = neighbours.intersection(cell)
        if len(inside) * 2 != len(cell):
            continue
        removed.update(tuple(sorted(rho.d + (v,))) for v in inside)
        added.extend(tuple(sorted(rho.d + (v,))) for v in cell if v not in inside)
    edges = [(edge, w) for edge, w in h.edges if edge not in removed] + [(edge, 1) for edge in added]
    logger.debug(f"Переключение: снято {len(removed)}, добавлено {len(added)} рёбер")
    return Hypergraph(h.n, tuple(edges), label=f"{h.label or 'H'}-switched", uniformity=h.uniformity)


def are_cospectral(h1: Hypergraph, h2: Hypergraph, mode: Literal["exact", "numeric"] = "exact",
                   tol: float = 1e-8) -> bool:
    if h1.n != h2.n:
        raise SizeMismatchError(f"Cannot compare spectra of orders {h1.n} and {h2.n}")
    if mode == "exact":
        return charpoly_exact(h1.adjacency) == charpoly_exact(h2.adjacency)
    return max_deviation(hypergraph_spectrum(h1), hypergraph_spectrum(h2)) <= tol


def build_switch_seed(h1: Hypergraph, v2: Iterable[int], m: Optional[int] = None) -> Tuple[Hypergraph, Hypergraph]:
    """
    H = (V_1 ∪ D, E_1 ∪ E_2), H_rho = (V_1 ∪ D, E_1 ∪ E_3), где D состоит из m-1 новых вершин,
    E_2 = {D ∪ {v} : v ∈ V_2}, E_3 = {D ∪ {v} : v ∈ V_1 \\ V_2}.
    """
    m = m if m is not None else is_uniform(h1)
    if m is None or is_uniform(h1) != m:
        raise ArityError(f"Seed hypergraph must be {m}-uniform")
    if is_regular(h1) is None:
        raise NotRegularError("Seed hypergraph must be regular")
    v2 = sorted({h1.check_vertex(v) for v in v2})
    if h1.n % 2 or len(v2) * 2 != h1.n:
        raise BadSubsetSizeError(f"V_2 must contain exactly half of the {h1.n} vertices, got {len(v2)}")
    d = tuple(range(h1.n + 1, h1.n + m))
    rest = [v for v in h1.vertices if v not in v2]
    n = h1.n + m - 1
    h = Hypergraph(n, h1.edges + tuple((d + (v,), 1) for v in v2), label="switch-seed", uniformity=m)
    h_rho = Hypergraph(n, h1.edges + tuple((d + (v,), 1) for v in rest), label="switch-seed-rho", uniformity=m)
    if not are_cospectral(h, h_rho, mode=certificate_mode(n)):
        raise HypothesisViolatedError("Switched seed is not cospectral with the original")
    return h, h_rho


def certificate_mode(n: int) -> Literal["exact", "numeric"]:
    """Точный сертификат, пока charpoly_exact проходит ограничение порядка; дальше численный."""
    try:
        SizeGuard.check_order(n, settings.CHARPOLY_MAX_ORDER, "exact cospectrality")
    except TooLargeError:
        logger.info(f"Порядок {n}: коспектральность проверяется численно")
        return "numeric"
    return "exact"


@dataclass(frozen=True)
class CertifiedPair:
    h: Hypergraph
    g: Hypergraph
    certificate: Literal["exact", "numeric"]
    isomorphism: Literal["non-isomorphic", "isomorphic", "cospectral-only"]

    @property
    def order(self) -> int:
        return self.h.n


def certify_pair(h: Hypergraph, g: Hypergraph) -> CertifiedPair:
    mode = certificate_mode(h.n)
    if not are_cospectral(h, g, mode=mode):
        raise HypothesisViolatedError(f"Pair on {h.n} vertices is not cospectral ({mode})")
    if h.n <= settings.ISO_MAX_N:
        isomorphism = "isomorphic" if is_isomorphic(h, g) else "non-isomorphic"
    else:
        isomorphism = "cospectral-only"
    return CertifiedPair(h, g, mode, isomorphism)


def corona_cospectral_family(h0: Hypergraph, g0: Hypergraph, h_att: Hypergraph, depth: int) -> List[CertifiedPair]:
    """
    Пара (H_0, G_0) и depth следующих пар: на каждом шаге к каждой вершине обеих сторон
    присоединяется копия регулярного H_att (вершинная корона с p = 1).
    """
    if depth < 0:
        raise HypothesisViolatedError(f"depth must be >= 0, got {depth}")
    if is_regular(h_att) is None:
        raise HypothesisViolatedError("Attached hypergraph must be regular")
    pairs = [certify_pair(h0, g0)]
    h, g = h0, g0
    for level in range(1, depth + 1):
        h = vertex_corona(h, h.n, 1, [h_att] * h.n)
        g = vertex_corona(g, g.n, 1, [h_att] * g.n)
        pairs.append(certify_pair(h, g))
        logger.info(f"Семейство: уровень {level}, {h.n} вершин, сертификат {pairs[-1].certificate}")
    return pairs
