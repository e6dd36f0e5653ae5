"""
Взвешенные соединения (join) семейств гиперграфов и соединения по остову (backbone).

Соединение семейства S есть соединение по остову с одним ребром {1..k} веса w_s.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import (
    ArityError, InsufficientVerticesError, BadCardinalitySetError, NotRegularError, NotConnectedError,
)
from hyperspectra.core.guards import SizeGuard
from hyperspectra.core.hypergraph import Hypergraph, is_uniform, is_regular, is_connected
from hyperspectra.core.rational import RationalMatrix, parse_rational
from hyperspectra.generators import consecutive_blocks, crossing_subsets
from hyperspectra.partitions import Partition, quotient_spectrum
from hyperspectra.spectra.eigen import SpectrumReport, group_eigenvalues, jacobi_eigh

logger = logging.getLogger("hyperspectra")


def binom(a: int, b: int) -> int:
    """Биномиальный коэффициент с нулём вне области: b < 0, b > a или a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _compositions(total: int, lower: Sequence[int], upper: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    ranges = [range(lo, max(lo, min(hi, total)) + 1) for lo, hi in zip(lower, upper)]
    for parts in product(*ranges):
        if sum(parts) == total:
            yield parts


def _check_coefficient_args(sizes: Sequence[int], m: int, *indices: int):
    k = len(sizes)
    if m < 2 or not 1 <= k <= m:
        raise ArityError(f"Join coefficients need 1 <= k <= m and m >= 2, got k={k}, m={m}")
    for idx in indices:
        if not 1 <= idx <= k:
            raise ArityError(f"Part index {idx} not in 1..{k}")
    if any(size < 1 for size in sizes):
        raise ArityError("All parts need at least one vertex")


def join_coeff_pp(sizes: Sequence[int], m: int, p: int) -> Fraction:
    """
    d^{S(m)}_pp: число новых рёбер через две фиксированные вершины части p, делённое на (m-1).
    Части j != p дают i_j >= 1 вершин, часть p даёт i_p >= 0 из оставшихся n_p - 2.
    """
    _check_coefficient_args(sizes, m, p)
    if sizes[p - 1] < 2:
        raise ArityError(f"d_pp needs n_p >= 2, part {p} has {sizes[p - 1]} vertex")
    available = [size - 2 if j == p - 1 else size for j, size in enumerate(sizes)]
    lower = [0 if j == p - 1 else 1 for j in range(len(sizes))]
    total = 0
    for parts in _compositions(m - 2, lower, available):
        term = 1
        for avail, chosen in zip(available, parts):
            term *= binom(avail, chosen)
        total += term
    return Fraction(total, m - 1)


def join_coeff_pq(sizes: Sequence[int], m: int, p: int, q: int) -> Fraction:
    """d^{S(m)}_pq для вершины из части p и вершины из части q."""
    _check_coefficient_args(sizes, m, p, q)
    if p == q:
        raise ArityError("d_pq needs two different parts")
    available = [size - 1 if j in (p - 1, q - 1) else size for j, size in enumerate(sizes)]
    lower = [0 if j in (p - 1, q - 1) else 1 for j in range(len(sizes))]
    total = 0
    for parts in _compositions(m - 2, lower, available):
        term = 1
        for avail, chosen in zip(available, parts):
            term *= binom(avail, chosen)
        total += term
    return Fraction(total, m - 1)


def join_coeff_oracle(sizes: Sequence[int], m: int, p: int, q: Optional[int] = None) -> Fraction:
    """Тот же коэффициент прямым перебором m-подмножеств через фиксированную пару вершин."""
    _check_coefficient_args(sizes, m, p, *([q] if q is not None else []))
    SizeGuard.check_enumeration(sum(sizes), "join coefficient oracle", limit=settings.ORACLE_MAX_N)
    blocks = consecutive_blocks(sizes)
    if q is None:
        if sizes[p - 1] < 2:
            raise ArityError(f"d_pp needs n_p >= 2, part {p} has {sizes[p - 1]} vertex")
        pair = (blocks[p - 1][0], blocks[p - 1][1])
    else:
        if p == q:
            raise ArityError("d_pq needs two different parts")
        pair = (blocks[p - 1][0], blocks[q - 1][0])
    block_sets = [set(block) for block in blocks]
    rest = [v for block in blocks for v in block if v not in pair]
    count = 0
    for extra in combinations(rest, m - 2):
        edge = set(pair).union(extra)
        if all(block & edge for block in block_sets):
            count += 1
    return Fraction(count, m - 1)


# ==============================================================================
# Планы соединений
# ==============================================================================

@dataclass(frozen=True)
class BackbonePlan:
    """
    Остов H_b и участники (по одному на вершину остова).
    Для неоднородного случая cardinalities[i] задаёт множество мощностей T_e для i-го ребра остова
    (в порядке backbone.edges), а cardinality_weights задаёт веса w_m новых рёбер мощности m.
    """
    backbone: Hypergraph
    participants: Tuple[Hypergraph, ...]
    cardinalities: Optional[Tuple[FrozenSet[int], ...]] = None
    cardinality_weights: Optional[Mapping[int, Fraction]] = field(default=None, hash=False)

    @property
    def is_nonuniform(self) -> bool:
        return self.cardinalities is not None

    @property
    def sizes(self) -> List[int]:
        return [h.n for h in self.participants]

    @property
    def blocks(self) -> List[Tuple[int, ...]]:
        return consecutive_blocks(self.sizes)

    def partition(self) -> Partition:
        return Partition.of(self.blocks)

    def edge_terms(self, index: int, m: Optional[int]) -> List[Tuple[int, Fraction]]:
        """Пары (мощность, вес) новых рёбер, порождённых ребром остова с номером index."""
        if self.is_nonuniform:
            weights = self.cardinality_weights or {}
            return [(size, weights[size]) for size in sorted(self.cardinalities[index])]
        return [(m, self.backbone.edges[index][1])]


@dataclass(frozen=True)
class JoinFamily:
    members: Tuple[Hypergraph, ...]
    m: Optional[int] = None
    ws: Fraction = Fraction(1)
    cardinalities: Optional[FrozenSet[int]] = None
    cardinality_weights: Optional[Mapping[int, Fraction]] = field(default=None, hash=False)

    @property
    def k(self) -> int:
        return len(self.members)

    def as_plan(self) -> BackbonePlan:
        """Семейство как остов с единственным ребром {1..k}."""
        if self.k < 2:
            raise ArityError(f"A join needs at least two members, got {self.k}")
        backbone = Hypergraph(self.k, ((tuple(range(1, self.k + 1)), parse_rational(self.ws)),),
                              label="join-family")
        if self.cardinalities is not None:
            return BackbonePlan(backbone, tuple(self.members), (frozenset(self.cardinalities),),
                                dict(self.cardinality_weights or {}))
        return BackbonePlan(backbone, tuple(self.members))


def _validate_plan(plan: BackbonePlan, m: Optional[int]):
    if len(plan.participants) != plan.backbone.n:
        raise ArityError(f"Backbone has {plan.backbone.n} vertices but {len(plan.participants)} participants")
    SizeGuard.check_enumeration(sum(plan.sizes), "join")
    for edge, _ in plan.backbone.edges:
        if len(edge) < 2:
            raise ArityError(f"Backbone edge {edge} has fewer than two participants")
    if plan.is_nonuniform:
        if len(plan.cardinalities) != plan.backbone.edge_count:
            raise BadCardinalitySetError("One cardinality set per backbone edge is required")
        weights = plan.cardinality_weights or {}
        for (edge, _), sizes in zip(plan.backbone.edges, plan.cardinalities):
            available = sum(plan.sizes[v - 1] for v in edge)
            for size in sizes:
                if not len(edge) <= size <= available:
                    raise BadCardinalitySetError(
                        f"Cardinality {size} outside {len(edge)}..{available} for backbone edge {edge}")
                if size not in weights:
                    raise BadCardinalitySetError(f"No weight given for cardinality {size}")
        return
    if m is None:
        raise ArityError("Uniform joins need the arity m")
    for edge, _ in plan.backbone.edges:
        if len(edge) > m:
            raise ArityError(f"Backbone edge {edge} is larger than m={m}")
        if sum(plan.sizes[v - 1] for v in edge) < m:
            raise InsufficientVerticesError(f"Participants of backbone edge {edge} have fewer than m={m} vertices")
    for idx, member in enumerate(plan.participants, start=1):
        if is_uniform(member) != m:
            raise ArityError(f"Participant {idx} ({member.label or 'unnamed'}) is not {m}-uniform")


def _build(plan: BackbonePlan, m: Optional[int], label: str) -> Hypergraph:
    _validate_plan(plan, m)
    blocks = plan.blocks
    edges: List[Tuple[Tuple[int, ...], Fraction]] = []
    for block, member in zip(blocks, plan.participants):
        offset = block[0] - 1
        edges.extend((tuple(v + offset for v in edge), w) for edge, w in member.edges)
    for index, (backbone_edge, _) in enumerate(plan.backbone.edges):
        edge_blocks = [blocks[v - 1] for v in backbone_edge]
        for size, weight in plan.edge_terms(index, m):
            edges.extend((subset, weight) for subset in crossing_subsets(edge_blocks, size))
    logger.debug(f"{label}: {len(edges)} рёбер на {sum(plan.sizes)} вершинах")
    return Hypergraph(sum(plan.sizes), tuple(edges), label=label,
                      uniformity=None if plan.is_nonuniform else m)


def join_set(family: JoinFamily) -> Hypergraph:
    """Соединение семейства m-однородных гиперграфов с весом w_s."""
    if family.m is None:
        raise ArityError("Uniform join needs the arity m")
    if family.k > family.m:
        raise ArityError(f"Uniform join needs k <= m, got k={family.k}, m={family.m}")
    if sum(h.n for h in family.members) < family.m:
        raise InsufficientVerticesError(f"Members have fewer than m={family.m} vertices in total")
    return _build(family.as_plan(), family.m, "join")


def join_on_backbone(plan: BackbonePlan, m: int) -> Hypergraph:
    if plan.is_nonuniform:
        raise ArityError("Use join_on_backbone_nonuniform for plans with cardinality sets")
    return _build(plan, m, "backbone-join")


def join_set_nonuniform(family: JoinFamily) -> Hypergraph:
    if family.cardinalities is None:
        raise BadCardinalitySetError("Non-uniform join needs a cardinality set T_s")
    return _build(family.as_plan(), None, "nonuniform-join")


def join_on_backbone_nonuniform(plan: BackbonePlan) -> Hypergraph:
    if not plan.is_nonuniform:
        raise BadCardinalitySetError("Non-uniform backbone join needs per-edge cardinality sets")
    return _build(plan, None, "nonuniform-backbone-join")


# ==============================================================================
# Коэффициенты, блочная формула, сдвиги спектра и фактор-матрица
# ==============================================================================

def coefficient_sums(plan: BackbonePlan, m: Optional[int] = None) -> Tuple[List[Fraction], Dict[Tuple[int, int], Fraction]]:
    """
    diag[p] = sum_{e ∋ p} sum_{(m', w)} w d^{S_e(m')}_pp,
    off[(p, q)] = sum_{e ∋ p, q} sum_{(m', w)} w d^{S_e(m')}_pq (участники с 1).
    """
    diag = [Fraction(0)] * len(plan.participants)
    off: Dict[Tuple[int, int], Fraction] = {}
    for index, (edge, _) in enumerate(plan.backbone.edges):
        sizes = [plan.sizes[v - 1] for v in edge]
        terms = plan.edge_terms(index, m)
        for pos, v in enumerate(edge, start=1):
            if sizes[pos - 1] >= 2:
                diag[v - 1] += sum((w * join_coeff_pp(sizes, size, pos) for size, w in terms), Fraction(0))
        for pos_a, pos_b in combinations(range(1, len(edge) + 1), 2):
            a, b = edge[pos_a - 1], edge[pos_b - 1]
            value = sum((w * join_coeff_pq(sizes, size, pos_a, pos_b) for size, w in terms), Fraction(0))
            off[(a, b)] = off.get((a, b), Fraction(0)) + value
            off[(b, a)] = off.get((b, a), Fraction(0)) + value
    return diag, off


def block_formula_adjacency(plan: BackbonePlan, m: Optional[int] = None) -> RationalMatrix:
    """Матрица смежности соединения по блочной формуле через A_{H_p} и коэффициенты d."""
    diag, off = coefficient_sums(plan, m)
    blocks = plan.blocks
    n = sum(plan.sizes)
    owner = {v: idx for idx, block in enumerate(blocks) for v in block}
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        p = owner[i]
        member_adjacency = plan.participants[p].adjacency
        for j in range(1, n + 1):
            if i == j:
                continue
            q = owner[j]
            if p == q:
                offset = blocks[p][0]
                rows[i - 1][j - 1] = member_adjacency[i - offset, j - offset] + diag[p]
            else:
                rows[i - 1][j - 1] = off.get((p + 1, q + 1), Fraction(0))
    return RationalMatrix.from_rows(rows)


def _participant_valencies(plan: BackbonePlan, require_connected: bool = False) -> List[Fraction]:
    valencies = []
    for idx, member in enumerate(plan.participants, start=1):
        r = is_regular(member)
        if r is None:
            raise NotRegularError(f"Participant {idx} ({member.label or 'unnamed'}) is not regular")
        if require_connected and not is_connected(member):
            raise NotConnectedError(f"Participant {idx} ({member.label or 'unnamed'}) is not connected")
        valencies.append(r)
    return valencies


def non_perron_eigenvalues(member: Hypergraph, r: Fraction) -> List[float]:
    """Спектр r-регулярного гиперграфа без одной копии r (подпространство ⟂ 1 инвариантно)."""
    values = jacobi_eigh(member.adjacency)[0].tolist()
    target = min(range(len(values)), key=lambda i: abs(values[i] - float(r)))
    return values[:target] + values[target + 1:]


def predicted_shifted_eigenvalues(plan: Union[BackbonePlan, JoinFamily], m: Optional[int] = None,
                                  require_connected: bool = False,
                                  tol: float = None) -> List[Tuple[float, int]]:
    """Собственные значения lambda - sum W_b(e) d_pp участников с (минимальной) кратностью."""
    if isinstance(plan, JoinFamily):
        m = plan.m if m is None else m
        plan = plan.as_plan()
    tol = settings.PREDICTION_TOL if tol is None else tol
    valencies = _participant_valencies(plan, require_connected)
    diag, _ = coefficient_sums(plan, m)
    shifted: List[float] = []
    for p, (member, r) in enumerate(zip(plan.participants, valencies)):
        shifted.extend(value - float(diag[p]) for value in non_perron_eigenvalues(member, r))
    return group_eigenvalues(shifted, tol)


def quotient_from_regular_join(plan: Union[BackbonePlan, JoinFamily], m: Optional[int] = None) -> RationalMatrix:
    """B_pp = r_p + (n_p - 1) sum W d_pp,  B_pq = n_q sum W d_pq."""
    if isinstance(plan, JoinFamily):
        m = plan.m if m is None else m
        plan = plan.as_plan()
    valencies = _participant_valencies(plan)
    diag, off = coefficient_sums(plan, m)
    sizes = plan.sizes
    k = len(sizes)
    rows = [[Fraction(0)] * k for _ in range(k)]
    for p in range(k):
        rows[p][p] = valencies[p] + (sizes[p] - 1) * diag[p]
        for q in range(k):
            if q != p:
                rows[p][q] = sizes[q] * off.get((p + 1, q + 1), Fraction(0))
    return RationalMatrix.from_rows(rows)


def predicted_join_spectrum(plan: Union[BackbonePlan, JoinFamily], m: Optional[int] = None) -> SpectrumReport:
    """Полный спектр соединения регулярных участников: сдвинутые значения и спектр B."""
    if isinstance(plan, JoinFamily):
        m = plan.m if m is None else m
        plan = plan.as_plan()
    shifted = predicted_shifted_eigenvalues(plan, m)
    values = [value for value, mult in shifted for _ in range(mult)]
    values.extend(quotient_spectrum(quotient_from_regular_join(plan, m), plan.sizes))
    return SpectrumReport.from_values(values, source="closed-form")
