"""
Спектры в замкнутой форме: полные многодольные гиперграфы, свободные циклы и пути,
вершинные и рёберные короны.

Все функции возвращают SpectrumReport с source="closed-form"; сравнение с численным
спектром прямой конструкции делают плагины проверки теорем.
"""
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from hyperspectra.core.exceptions import (
    ArityError, DegenerateCycleError, HypothesisViolatedError, NumericalError, UnsupportedRegimeError,
)
from hyperspectra.core.hypergraph import Hypergraph, is_regular, is_uniform
from hyperspectra.core.rational import RationalMatrix
from hyperspectra.corona import (
    CoronaConstants, CoronaGeometry, constants_from_corona, corona_constants_oracle, edge_corona, vertex_corona,
)
from hyperspectra.generators import complete_multipartite
from hyperspectra.joins import non_perron_eigenvalues, predicted_join_spectrum

from .eigen import SpectrumReport, hypergraph_spectrum, jacobi_eigh
from .polynomials import RationalPoly, exact_roots, real_poly_roots


def _report(values: Sequence[float]) -> SpectrumReport:
    return SpectrumReport.from_values(list(values), source="closed-form")


def join_spectrum(plan, m: Optional[int] = None) -> SpectrumReport:
    return predicted_join_spectrum(plan, m)


# ==============================================================================
# Полные многодольные
# ==============================================================================

def complete_multipartite_equal_spectrum(m: int, n: int) -> SpectrumReport:
    """K^m_{n,...,n}: n^{m-1} (x1), -n^{m-1}/(m-1) (x(m-1)), 0 (x(nm-m))."""
    if m < 2 or n < 1:
        raise ArityError(f"K^m_(n..n) needs m >= 2 and n >= 1, got m={m}, n={n}")
    top = float(n ** (m - 1))
    return _report([top] + [-top / (m - 1)] * (m - 1) + [0.0] * (n * m - m))


def equal_blocks_spectrum(m: int, n1: int, l1: int, n2: int, l2: int) -> SpectrumReport:
    """l_1 частей размера n_1 и l_2 частей размера n_2, l_1 + l_2 = m."""
    if l1 < 1 or l2 < 1 or l1 + l2 != m or n1 < 1 or n2 < 1:
        raise ArityError(f"Two-block multipartite needs l1, l2 >= 1 and l1 + l2 = m, got {l1}+{l2} vs m={m}")
    s1 = n1 ** (l1 - 1) * n2 ** l2
    s2 = n1 ** l1 * n2 ** (l2 - 1)
    total = s1 * (l1 - 1) + s2 * (l2 - 1)
    root = math.sqrt(total * total + 4 * s1 * s2 * (l1 + l2 - 1))
    values = [(total + root) / 2 / (m - 1), (total - root) / 2 / (m - 1)]
    values += [-s1 / (m - 1)] * (l1 - 1) + [-s2 / (m - 1)] * (l2 - 1)
    values += [0.0] * (l1 * n1 + l2 * n2 - m)
    return _report(values)


def scaling_deviation(m: int, sizes: Sequence[int], r: int) -> float:
    """Относительное отклонение закона alpha -> r^{m-1} alpha на ненулевом спектре."""
    if r < 1:
        raise ArityError(f"Scaling factor must be a positive integer, got {r}")
    small = hypergraph_spectrum(complete_multipartite(m, sizes))
    large = hypergraph_spectrum(complete_multipartite(m, [r * n for n in sizes]))
    factor = r ** (m - 1)
    zero_small = 1e-9 * max(1.0, max(abs(v) for v in small))
    zero_large = 1e-9 * max(1.0, max(abs(v) for v in large))
    scaled = sorted(factor * v for v in small if abs(v) > zero_small)
    nonzero = sorted(v for v in large if abs(v) > zero_large)
    if len(scaled) != len(nonzero):
        return math.inf
    return max((abs(a - b) / max(1.0, abs(b)) for a, b in zip(scaled, nonzero)), default=0.0)


def scaling_check(m: int, sizes: Sequence[int], r: int, tol: float = 1e-8) -> bool:
    return scaling_deviation(m, sizes, r) <= tol


# ==============================================================================
# Свободные циклы и пути
# ==============================================================================

def _check_loose_regime(m: int, s: int):
    if s < 1 or m < 2:
        raise ArityError(f"Looseness needs m >= 2 and s >= 1, got m={m}, s={s}")
    if m < 2 * s:
        raise UnsupportedRegimeError(f"Closed form needs m = 2s or m >= 2s+1, got m={m}, s={s}")


def _quadratic(m: int, s: int, cosine: float) -> Polynomial:
    """x^2 - (m-3+2s cos)x - 2(m-s-1+s cos)"""
    return Polynomial([-2.0 * (m - s - 1 + s * cosine), -(m - 3 + 2.0 * s * cosine), 1.0])


def loose_cycle_spectrum(m: int, s: int, n: int) -> SpectrumReport:
    _check_loose_regime(m, s)
    if n < 2:
        raise DegenerateCycleError(f"Loose cycle needs n >= 2 edges, got {n}")
    angles = [2 * math.pi * i / n for i in range(1, n + 1)]
    if m == 2 * s:
        values = [-2.0 / (2 * s - 1)] * (n * (s - 1))
        values += [2.0 / (2 * s - 1) * (s - 1 + s * math.cos(theta)) for theta in angles]
        return _report(values)
    values = [-1.0 / (m - 1)] * (n * (m - 2 * s - 1)) + [-2.0 / (m - 1)] * (n * (s - 1))
    for theta in angles:
        cosine = math.cos(theta)
        b = m - 3 + 2 * s * cosine
        root = math.sqrt(b * b + 8 * (m - s - 1 + s * cosine))
        values += [(b + root) / 2 / (m - 1), (b - root) / 2 / (m - 1)]
    return _report(values)


def _cosine_product(length: int, factor) -> Polynomial:
    """prod_{i=1}^{length} factor(cos(pi i/(length+1))); пустое произведение = 1, length < 0 даёт 0."""
    if length < 0:
        return Polynomial([0.0])
    result = Polynomial([1.0])
    for i in range(1, length + 1):
        result = result * factor(math.cos(math.pi * i / (length + 1)))
    return result


def _drop_linear(numerator: Polynomial, root: float) -> Polynomial:
    quotient, remainder = divmod(numerator, Polynomial([-root, 1.0]))
    scale = max(1.0, float(np.max(np.abs(numerator.coef))))
    if np.max(np.abs(remainder.coef)) > 1e-8 * scale:
        raise NumericalError(f"Division by (x - {root}) leaves remainder {remainder.coef.tolist()}")
    return quotient


def loose_path_polynomial(m: int, s: int, n: int) -> Polynomial:
    """Многочлен, корни которого (делённые на m-1) дают непростую часть спектра пути."""
    _check_loose_regime(m, s)
    x = Polynomial([0.0, 1.0])
    if m == 2 * s:
        def t(j: int) -> Polynomial:
            return _cosine_product(n - j, lambda cosine: Polynomial([2 * s - 2 + 2 * s * cosine, -1.0]))
        lead = (s - 1) - x
        return lead * lead * t(1) - 2 * s * s * lead * t(2) + s ** 4 * t(3)

    def f(j: int) -> Polynomial:
        return _cosine_product(n - j, lambda cosine: _quadratic(m, s, cosine))
    lead = (m - s - 1) - x
    numerator = lead * lead * f(1) + 2 * s * s * (1 + x) * lead * f(2) + s ** 4 * (1 + x) ** 2 * f(3)
    # делитель (t - 1 - x), t = m - 2s
    return -_drop_linear(numerator, float(m - 2 * s - 1))


def loose_path_spectrum(m: int, s: int, n: int) -> SpectrumReport:
    _check_loose_regime(m, s)
    if n < 1:
        raise ArityError(f"Loose path needs n >= 1 edges, got {n}")
    if n == 1:
        return _report([1.0] + [-1.0 / (m - 1)] * (m - 1))
    roots = real_poly_roots(loose_path_polynomial(m, s, n))
    values = [root / (m - 1) for root in roots]
    if m == 2 * s:
        values += [-1.0 / (m - 1)] * (2 * (s - 1))
    else:
        values += [-1.0 / (m - 1)] * (n * (m - 1) - 2 * s * (n - 1))
    values += [-2.0 / (m - 1)] * ((n - 1) * (s - 1))
    return _report(values)


def loose_path_s1_polynomial(m: int, n: int) -> Polynomial:
    """
    g(x) = D_{n+1} + 2(m-2) D_n + (m-2)^2 D_{n-1},  D_l = prod_{i=1}^{l} (v + 2u cos(pi i/(l+1))),
    u = -(1+x), v = x(x-m+3) - 2(m-2).
    """
    if m < 3:
        raise UnsupportedRegimeError(f"The s=1 path form needs m >= 3, got {m}")
    x = Polynomial([0.0, 1.0])
    u = -(1 + x)
    v = x * (x - (m - 3)) - 2 * (m - 2)

    def d(length: int) -> Polynomial:
        return _cosine_product(length, lambda cosine: v + 2 * cosine * u)
    return d(n + 1) + 2 * (m - 2) * d(n) + (m - 2) ** 2 * d(n - 1)


def loose_path_s1_spectrum(m: int, n: int) -> SpectrumReport:
    g = loose_path_s1_polynomial(m, n)
    roots = real_poly_roots(_drop_linear(g, float(m - 3)))
    values = [root / (m - 1) for root in roots] + [-1.0 / (m - 1)] * (n * (m - 3))
    return _report(values)


def double_root_residual(m: int, n: int) -> float:
    """max(|g(-1)|, |g'(-1)|) относительно нормы g: ноль, если (x+1)^2 делит g."""
    g = loose_path_s1_polynomial(m, n)
    scale = max(1.0, float(np.max(np.abs(g.coef))))
    return max(abs(g(-1.0)), abs(g.deriv()(-1.0))) / scale


# ==============================================================================
# Вершинные короны
# ==============================================================================

def _regular_members(members: Sequence[Hypergraph]) -> Tuple[int, Fraction]:
    sizes = {h.n for h in members}
    if len(sizes) != 1:
        raise HypothesisViolatedError(f"Attached hypergraphs must share one order, got {sorted(sizes)}")
    valencies = set()
    for h in members:
        r = is_regular(h)
        if r is None:
            raise HypothesisViolatedError(f"Attached hypergraph {h.label or ''} is not regular")
        valencies.add(r)
    if len(valencies) != 1:
        raise HypothesisViolatedError(f"Attached hypergraphs must share one valency, got {sorted(valencies)}")
    return sizes.pop(), valencies.pop()


def vertex_corona_constants(h0: Hypergraph, members: Sequence[Hypergraph], p: int) -> CoronaConstants:
    m = is_uniform(h0)
    if m is None:
        raise ArityError("Base hypergraph is not uniform")
    return corona_constants_oracle(CoronaGeometry.for_vertex(m, len(members), p, members[0].n))


def _copy_family(members: Sequence[Hypergraph], copies: int, r1: Fraction, c: Fraction) -> List[float]:
    values = []
    for member in members:
        values += [value - float(c) for value in non_perron_eigenvalues(member, r1)] * copies
    return values


def vertex_corona_reduced_spectrum(h0: Hypergraph, members: Sequence[Hypergraph], p: int,
                                   constants: Optional[CoronaConstants] = None) -> SpectrumReport:
    """
    Общий случай: симметричная матрица порядка n+k
    [[A_{H_0} + a I_k⊗(J_p-I_p), b sqrt(p n_1) C], [b sqrt(p n_1) C^T, rho I_k]],
    плюс rho кратности k(p-1) и lambda - c кратности kp(n_1-1).
    """
    k = len(members)
    if h0.n != k * p:
        raise HypothesisViolatedError(f"|V_0| = {h0.n} is not k*p = {k}*{p}")
    n1, r1 = _regular_members(members)
    constants = constants or vertex_corona_constants(h0, members, p)
    rho = float(constants.rho(r1, n1))
    n = h0.n
    matrix = np.zeros((n + k, n + k))
    matrix[:n, :n] = h0.adjacency.to_numpy()
    cross = float(constants.b) * math.sqrt(p * n1)
    for cell in range(k):
        rows = slice(cell * p, (cell + 1) * p)
        matrix[rows, rows] += float(constants.a) * (np.ones((p, p)) - np.eye(p))
        matrix[rows, n + cell] = cross
        matrix[n + cell, rows] = cross
        matrix[n + cell, n + cell] = rho
    values = jacobi_eigh(matrix)[0].tolist()
    values += [rho] * (k * (p - 1))
    values += _copy_family(members, p, r1, constants.c)
    return _report(values)


def vertex_corona_cor3_spectrum(h0: Hypergraph, members: Sequence[Hypergraph],
                                constants: Optional[CoronaConstants] = None) -> SpectrumReport:
    """p = 1: каждой вершине базы своя копия."""
    if len(members) != h0.n:
        raise HypothesisViolatedError(f"p=1 corona needs one member per base vertex, got {len(members)}")
    n1, r1 = _regular_members(members)
    constants = constants or vertex_corona_constants(h0, members, 1)
    rho = float(constants.rho(r1, n1))
    b2n1 = float(constants.b) ** 2 * n1
    values = []
    for mu in hypergraph_spectrum(h0):
        root = math.sqrt((rho - mu) ** 2 + 4 * b2n1)
        values += [(rho + mu + root) / 2, (rho + mu - root) / 2]
    values += _copy_family(members, 1, r1, constants.c)
    return _report(values)


def vertex_corona_cor4_spectrum(h0: Hypergraph, member: Hypergraph,
                                constants: Optional[CoronaConstants] = None) -> SpectrumReport:
    """k = 1, H_0 r_0-регулярен: к V_0 подсоединены n копий H_1."""
    r0 = is_regular(h0)
    if r0 is None:
        raise HypothesisViolatedError("Base hypergraph must be regular for the single-cell closed form")
    n = h0.n
    n1, r1 = _regular_members([member])
    constants = constants or vertex_corona_constants(h0, [member], n)
    rho = float(constants.rho(r1, n1))
    a, b = float(constants.a), float(constants.b)
    base = float(r0) + (n - 1) * a
    # связь базового all-ones вектора с агрегированной копией: b * n * sqrt(n1)
    root = math.sqrt((rho - base) ** 2 + 4 * b * b * n * n * n1)
    values = [(rho + base + root) / 2, (rho + base - root) / 2]
    values += [rho] * (n - 1)
    values += [mu - a for mu in non_perron_eigenvalues(h0, r0)]
    values += _copy_family([member], n, r1, constants.c)
    return _report(values)


def vertex_corona_spectrum(h0: Hypergraph, members: Sequence[Hypergraph], p: int,
                           constants: Optional[CoronaConstants] = None, method: str = "auto") -> SpectrumReport:
    """Предсказанный спектр H_0 ∘^k_p H_i; method: auto | cor3 | cor4 | reduced."""
    if method == "auto":
        if p == 1:
            method = "cor3"
        elif len(members) == 1 and is_regular(h0) is not None:
            method = "cor4"
        else:
            method = "reduced"
    if method == "cor3":
        return vertex_corona_cor3_spectrum(h0, members, constants)
    if method == "cor4":
        if len(members) != 1 or p != h0.n:
            raise HypothesisViolatedError("Single-cell closed form needs k = 1 and p = |V_0|")
        return vertex_corona_cor4_spectrum(h0, members[0], constants)
    if method == "reduced":
        return vertex_corona_reduced_spectrum(h0, members, p, constants)
    raise ArityError(f"Unknown vertex corona method {method!r}")


# ==============================================================================
# Рёберные короны
# ==============================================================================

def edge_corona_constants(h0: Hypergraph, members: Sequence[Hypergraph]) -> CoronaConstants:
    m = is_uniform(h0)
    if m is None:
        raise ArityError("Base hypergraph is not uniform")
    return corona_constants_oracle(CoronaGeometry.for_edge(m, h0, members[0].n))


def _edge_setup(h0: Hypergraph, members: Sequence[Hypergraph], constants: Optional[CoronaConstants]):
    if len(members) != h0.edge_count:
        raise HypothesisViolatedError(f"Edge corona needs {h0.edge_count} members, got {len(members)}")
    if not h0.is_unweighted():
        raise HypothesisViolatedError("Closed forms for the edge corona need an unweighted base")
    m = is_uniform(h0)
    n1, r1 = _regular_members(members)
    constants = constants or edge_corona_constants(h0, members)
    alpha = 1 + (m - 1) * constants.a
    return m, n1, r1, constants, alpha


def _remove_copies(values: List[float], target: float, count: int, tol: float = 1e-7) -> List[float]:
    remaining = list(values)
    for _ in range(count):
        idx = min(range(len(remaining)), key=lambda i: abs(remaining[i] - target), default=None)
        if idx is None or abs(remaining[idx] - target) > tol * max(1.0, abs(target)):
            raise HypothesisViolatedError(f"Expected {count} copies of {target} to cancel, not found")
        remaining.pop(idx)
    return remaining


def edge_corona_spectrum(h0: Hypergraph, members: Sequence[Hypergraph],
                         constants: Optional[CoronaConstants] = None) -> SpectrumReport:
    """
    r-регулярная база на n вершинах с k рёбрами: rho кратности k - n, lambda - c,
    beta^± = (1/2)[rho + alpha mu ± sqrt((rho - alpha mu)^2 + 4 b^2 n_1 ((m-1) mu + r))].
    """
    r = is_regular(h0)
    if r is None:
        raise HypothesisViolatedError("Base hypergraph is not regular; use edge_corona_polynomial")
    m, n1, r1, constants, alpha = _edge_setup(h0, members, constants)
    rho = float(constants.rho(r1, n1))
    b2n1 = float(constants.b) ** 2 * n1
    values = []
    for mu in hypergraph_spectrum(h0):
        root = math.sqrt(max((rho - float(alpha) * mu) ** 2 + 4 * b2n1 * ((m - 1) * mu + float(r)), 0.0))
        values += [(rho + float(alpha) * mu + root) / 2, (rho + float(alpha) * mu - root) / 2]
    k, n = h0.edge_count, h0.n
    if k >= n:
        values += [rho] * (k - n)
    else:
        values = _remove_copies(values, rho, n - k)
    values += _copy_family(members, 1, r1, constants.c)
    return _report(values)


def _lagrange(points: Sequence[Fraction], values: Sequence[Fraction]) -> RationalPoly:
    result = RationalPoly(())
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi == 0:
            continue
        basis = RationalPoly.constant(yi)
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * RationalPoly.linear_root(xj) * (1 / (xi - xj))
        result = result + basis
    return result


def edge_corona_polynomial(h0: Hypergraph, members: Sequence[Hypergraph],
                           constants: Optional[CoronaConstants] = None) -> RationalPoly:
    """
    Точный многочлен непростой части спектра (база любая, не обязательно регулярная):
    det(beta_1(x) A - b^2 n_1 D + beta_2(x) I) (x - rho)^{k-n},
    beta_1 = alpha(rho - x) - (m-1) b^2 n_1, beta_2 = x(x - rho).
    """
    m, n1, r1, constants, alpha = _edge_setup(h0, members, constants)
    rho = constants.rho(r1, n1)
    b2n1 = constants.b ** 2 * n1
    n, k = h0.n, h0.edge_count
    adjacency = h0.adjacency
    degrees = [Fraction(h0.degree(v)) for v in h0.vertices]

    def determinant_at(x: Fraction) -> Fraction:
        beta1 = alpha * (rho - x) - (m - 1) * b2n1
        beta2 = x * (x - rho)
        rows = [[beta1 * adjacency[i, j] + (beta2 - b2n1 * degrees[i] if i == j else 0)
                 for j in range(n)] for i in range(n)]
        return RationalMatrix.from_rows(rows).determinant()

    points = [Fraction(i) for i in range(2 * n + 1)]
    poly = _lagrange(points, [determinant_at(x) for x in points])
    linear = RationalPoly.linear_root(rho)
    if k >= n:
        return poly * linear ** (k - n)
    quotient, remainder = poly.divmod(linear ** (n - k))
    if not remainder.is_zero():
        raise HypothesisViolatedError(f"(x - {rho})^{n - k} does not divide the edge corona determinant")
    return quotient


def edge_corona_polynomial_spectrum(h0: Hypergraph, members: Sequence[Hypergraph],
                                    constants: Optional[CoronaConstants] = None) -> SpectrumReport:
    """Корни точного многочлена и семейство lambda - c."""
    _, n1, r1, constants, _ = _edge_setup(h0, members, constants)
    values = exact_roots(edge_corona_polynomial(h0, members, constants))
    values += _copy_family(members, 1, r1, constants.c)
    return _report(values)


def oracle_constants_for(kind: str, h0: Hypergraph, members: Sequence[Hypergraph], p: int = 1) -> CoronaConstants:
    """Константы, считанные с построенной короны (а не с канонического экземпляра)."""
    if kind == "vertex":
        corona = vertex_corona(h0, len(members), p, members)
    else:
        corona = edge_corona(h0, members)
    return constants_from_corona(kind, h0, members, corona, p=p)
