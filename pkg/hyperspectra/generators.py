"""
Генераторы именованных семейств гиперграфов.

Блоки вершин многодольных гиперграфов идут подряд: V_1 = 1..n_1, V_2 = n_1+1..n_1+n_2 и т.д.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from hyperspectra.core.exceptions import (
    BadArityError, ModeArityMismatchError, BadLoosenessError, DegenerateCycleError,
    TooSmallError, FormatError,
)
from hyperspectra.core.guards import SizeGuard
from hyperspectra.core.hypergraph import Hypergraph
from hyperspectra.core.rational import RationalLike, parse_rational

logger = logging.getLogger("hyperspectra")


def consecutive_blocks(sizes: Sequence[int], start: int = 1) -> List[Tuple[int, ...]]:
    blocks = []
    for size in sizes:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return blocks


def crossing_subsets(blocks: Sequence[Sequence[int]], size: int, what: str = "cross-edge enumeration") -> Iterator[Tuple[int, ...]]:
    """Все size-подмножества объединения блоков, пересекающие каждый блок."""
    universe = sorted(v for block in blocks for v in block)
    SizeGuard.check_enumeration(len(universe), what)
    block_sets = [frozenset(block) for block in blocks]
    for subset in combinations(universe, size):
        chosen = set(subset)
        if all(not block.isdisjoint(chosen) for block in block_sets):
            yield subset


def complete_uniform(m: int, n: int, w: RationalLike = 1) -> Hypergraph:
    """K^m_n: все m-подмножества n вершин."""
    if m < 2 or m > n:
        raise BadArityError(f"K^m_n needs 2 <= m <= n, got m={m}, n={n}")
    SizeGuard.check_enumeration(n, "complete_uniform")
    w = parse_rational(w)
    return Hypergraph(n, tuple((e, w) for e in combinations(range(1, n + 1), m)),
                      label=f"K^{m}_{n}", uniformity=m)


def empty_uniform(m: int, n: int) -> Hypergraph:
    """Дополнение K^m_n: n изолированных вершин с объявленной однородностью m."""
    if n < 1:
        raise TooSmallError(f"empty_uniform needs n >= 1, got {n}")
    return Hypergraph(n, (), label=f"empty^{m}_{n}", uniformity=m)


def complete_multipartite(m: int, sizes: Sequence[int], mode: str = "weak") -> Hypergraph:
    k = len(sizes)
    if any(size < 1 for size in sizes):
        raise TooSmallError(f"All parts need at least one vertex, got {list(sizes)}")
    if mode == "weak" and m < k:
        raise ModeArityMismatchError(f"Weak {k}-partite needs m >= k, got m={m}")
    if mode == "strong" and m > k:
        raise ModeArityMismatchError(f"Strong {k}-partite needs m <= k, got m={m}")
    if mode not in ("weak", "strong"):
        raise ModeArityMismatchError(f"Unknown mode {mode!r}")
    if m < 2:
        raise BadArityError(f"Edges need m >= 2, got {m}")

    blocks = consecutive_blocks(sizes)
    n = sum(sizes)
    if mode == "weak":
        edges = list(crossing_subsets(blocks, m, "complete_multipartite"))
    else:
        SizeGuard.check_enumeration(n, "complete_multipartite")
        part_of = {v: idx for idx, block in enumerate(blocks) for v in block}
        edges = [e for e in combinations(range(1, n + 1), m) if len({part_of[v] for v in e}) == m]
    label = "K^{}_{{{}}}".format(m, ",".join(str(s) for s in sizes))
    return Hypergraph(n, tuple((e, 1) for e in edges), label=label, uniformity=m)


def _check_looseness(m: int, s: int):
    if s < 1 or 2 * s > m:
        raise BadLoosenessError(f"Loose paths and cycles need 1 <= s and 2s <= m, got m={m}, s={s}")


def loose_path(m: int, s: int, n: int) -> Hypergraph:
    """P^(m)_L(s;n): n рёбер, соседние пересекаются ровно по s вершинам."""
    _check_looseness(m, s)
    if n < 1:
        raise TooSmallError(f"Loose path needs n >= 1 edges, got {n}")
    step = m - s
    edges = [tuple(range(i * step + 1, i * step + m + 1)) for i in range(n)]
    return Hypergraph(m + (n - 1) * step, tuple((e, 1) for e in edges),
                      label=f"P^{m}_L({s};{n})", uniformity=m)


def loose_cycle(m: int, s: int, n: int) -> Hypergraph:
    """C^(m)_L(s;n): последнее ребро замыкается на первые s вершин."""
    _check_looseness(m, s)
    if n < 2:
        raise DegenerateCycleError(f"Loose cycle needs n >= 2 edges, got {n}")
    step = m - s
    total = n * step
    edges = [tuple(sorted((i * step + j) % total + 1 for j in range(m))) for i in range(n)]
    if len(set(edges)) != n or any(len(set(e)) != m for e in edges):
        raise DegenerateCycleError(f"Loose cycle ({m},{s},{n}) repeats an edge")
    return Hypergraph(total, tuple((e, 1) for e in edges), label=f"C^{m}_L({s};{n})", uniformity=m)


def path_graph(n: int) -> Hypergraph:
    if n < 1:
        raise TooSmallError(f"path_graph needs n >= 1, got {n}")
    return Hypergraph(n, tuple(((i, i + 1), 1) for i in range(1, n)), label=f"P_{n}", uniformity=2)


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise TooSmallError(f"cycle_graph needs n >= 3, got {n}")
    edges = [((i, i + 1), 1) for i in range(1, n)] + [((1, n), 1)]
    return Hypergraph(n, tuple(edges), label=f"C_{n}", uniformity=2)


def complete_graph(n: int, w: RationalLike = 1) -> Hypergraph:
    if n < 1:
        raise TooSmallError(f"complete_graph needs n >= 1, got {n}")
    w = parse_rational(w)
    return Hypergraph(n, tuple((e, w) for e in combinations(range(1, n + 1), 2)),
                      label=f"K_{n}", uniformity=2)


# --- Пример с переключением: пара коспектральных 3-однородных гиперграфов на 8 вершинах ---

EXAMPLE3_H1_EDGES = ((1, 2, 3), (3, 4, 5), (5, 6, 1), (2, 4, 6))


def example3_h1() -> Hypergraph:
    """2-регулярный 3-однородный гиперграф на 6 вершинах."""
    return Hypergraph(6, tuple((e, 1) for e in EXAMPLE3_H1_EDGES), label="example3-h1", uniformity=3)


def example3_pair() -> Tuple[Hypergraph, Hypergraph]:
    h0 = Hypergraph(8, tuple((e, 1) for e in EXAMPLE3_H1_EDGES + ((7, 8, 3), (7, 8, 4), (7, 8, 5))),
                    label="example3-h0", uniformity=3)
    g0 = Hypergraph(8, tuple((e, 1) for e in EXAMPLE3_H1_EDGES + ((7, 8, 1), (7, 8, 2), (7, 8, 6))),
                    label="example3-g0", uniformity=3)
    return h0, g0


# ==============================================================================
# Строковые описания генераторов: "complete-uniform:3:4", "multipartite:3:2,3,4:weak"
# ==============================================================================

def _ints(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


BUILDERS = {
    "complete-uniform": lambda args: complete_uniform(int(args[0]), int(args[1]), *(args[2:3] or [1])),
    "empty": lambda args: empty_uniform(int(args[0]), int(args[1])),
    "multipartite": lambda args: complete_multipartite(int(args[0]), _ints(args[1]), *(args[2:3] or ["weak"])),
    "loose-path": lambda args: loose_path(int(args[0]), int(args[1]), int(args[2])),
    "loose-cycle": lambda args: loose_cycle(int(args[0]), int(args[1]), int(args[2])),
    "path": lambda args: path_graph(int(args[0])),
    "cycle": lambda args: cycle_graph(int(args[0])),
    "complete-graph": lambda args: complete_graph(int(args[0]), *(args[1:2] or [1])),
    "example3-h1": lambda args: example3_h1(),
    "example3-h0": lambda args: example3_pair()[0],
    "example3-g0": lambda args: example3_pair()[1],
}


def from_spec(text: str) -> Hypergraph:
    """Построение по строке вида "<генератор>:<арг>:<арг>"."""
    name, *args = text.strip().split(":")
    builder = BUILDERS.get(name)
    if builder is None:
        raise FormatError(f"Unknown generator {name!r}; known: {', '.join(sorted(BUILDERS))}")
    try:
        return builder(args)
    except (IndexError, ValueError) as exc:
        raise FormatError(f"Bad generator arguments in {text!r}: {exc}") from exc
