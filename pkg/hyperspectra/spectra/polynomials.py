"""
Характеристические многочлены: точные (Fraction) и численные (numpy.polynomial).
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import ArityError, NumericalError
from hyperspectra.core.guards import SizeGuard
from hyperspectra.core.rational import RationalMatrix, RationalLike, format_rational

from .eigen import SpectrumReport


@dataclass(frozen=True)
class RationalPoly:
    """Многочлен с рациональными коэффициентами, от младшего к старшему."""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalPoly":
        return cls((Fraction(value),))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def linear_root(cls, root: RationalLike) -> "RationalPoly":
        """x - root"""
        return cls((-Fraction(root), 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return RationalPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: Union["RationalPoly", RationalLike]) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(tuple(c * Fraction(other) for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPoly":
        result = RationalPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x):
        result = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            result = result * x + (c if isinstance(result, Fraction) else float(c))
        return result

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def divmod(self, divisor: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / divisor.leading
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RationalPoly(tuple(quotient)), RationalPoly(tuple(remainder))

    def __floordiv__(self, divisor: "RationalPoly") -> "RationalPoly":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise NumericalError("polynomial division left a remainder")
        return quotient

    def to_numpy(self) -> Polynomial:
        return Polynomial([float(c) for c in self.coeffs] or [0.0])

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c:
                monomial = {0: "", 1: "x"}.get(power, f"x^{power}")
                terms.append(f"({format_rational(c)})" + (f"*{monomial}" if monomial else ""))
        return " + ".join(terms) or "0"


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(poly: RationalPoly) -> List[Tuple[RationalPoly, int]]:
    """Разложение Юна: poly = c * prod f_i^i с попарно взаимно простыми бесквадратными f_i."""
    if poly.degree < 1:
        return []
    a = poly.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a // c
    factors = []
    multiplicity = 1
    while c.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            factors.append((z, multiplicity))
        multiplicity += 1
        w = y
        c = c // y
    if w.degree > 0:
        factors.append((w, multiplicity))
    return factors


# ==============================================================================
# Точные характеристические многочлены
# ==============================================================================

def charpoly_exact(matrix: RationalMatrix) -> RationalPoly:
    """
    det(xI - M) рекурсией Фаддеева–Леверье.

    Матрица сначала умножается на НОК знаменателей, рекурсия идёт в целых числах,
    затем коэффициенты масштабируются обратно.
    """
    n = matrix.order
    SizeGuard.check_order(n, settings.CHARPOLY_MAX_ORDER, "charpoly_exact")
    if n == 0:
        return RationalPoly.constant(1)
    scale = reduce(lcm, (x.denominator for row in matrix.rows for x in row), 1)
    a = [[int(x * scale) for x in row] for row in matrix.rows]

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    am = [[0] * n for _ in range(n)]  # A * M_{k-1}
    for k in range(1, n + 1):
        mk = [row[:] for row in am]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        mk_columns = list(zip(*mk))
        am = [[sum(x * y for x, y in zip(row, col)) for col in mk_columns] for row in a]
        trace = sum(am[i][i] for i in range(n))
        if trace % k:
            raise NumericalError("Faddeev-LeVerrier produced a non-integral coefficient")
        coeffs[n - k] = -trace // k
    return RationalPoly(tuple(Fraction(c, scale ** (n - j)) for j, c in enumerate(coeffs)))


def elementary_symmetric(values: Sequence[RationalLike]) -> List[Fraction]:
    """[e_0, e_1, ..., e_len]"""
    e = [Fraction(1)]
    for v in values:
        v = Fraction(v)
        e = [a + v * b for a, b in zip(e + [Fraction(0)], [Fraction(0)] + e)]
    return e


def multipartite_charpoly(m: int, sizes: Sequence[int]) -> RationalPoly:
    """
    Характеристический многочлен K^m_{n_1..n_m}:
    x^{n-m} (x^m - sum_{i=2}^m (i-1)/(m-1)^i sigma_i(s) x^{m-i}),  s_i = prod_{j != i} n_j.
    """
    if len(sizes) != m or m < 2:
        raise ArityError(f"multipartite_charpoly needs exactly m={m} parts, got {len(sizes)}")
    total = 1
    for size in sizes:
        total *= size
    s = [Fraction(total, size) for size in sizes]
    sigma = elementary_symmetric(s)
    inner = [Fraction(0)] * (m + 1)
    inner[m] = Fraction(1)
    for i in range(2, m + 1):
        inner[m - i] -= Fraction(i - 1) / Fraction(m - 1) ** i * sigma[i]
    return RationalPoly(tuple([Fraction(0)] * (sum(sizes) - m) + inner))


# ==============================================================================
# Корни
# ==============================================================================

def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _sturm_chain(poly: RationalPoly) -> List[RationalPoly]:
    chain = [poly, poly.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        remainder = chain[-2].divmod(chain[-1])[1]
        if remainder.is_zero():
            break
        chain.append(-remainder)
    return chain


def _variations(chain: Sequence[RationalPoly], x: Fraction) -> int:
    signs = [s for s in (_sign(p(x)) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_real_roots(poly: RationalPoly, precision: float = 1e-13) -> List[float]:
    """Вещественные корни бесквадратного многочлена: изоляция по Штурму и бисекция."""
    if poly.degree < 1:
        return []
    chain = _sturm_chain(poly)
    # Граница Коши, округлённая вверх до целого: знаменатели при бисекции остаются степенями двойки
    bound = Fraction(math.ceil(1 + max(abs(c / poly.leading) for c in poly.coeffs[:-1])) + 1)
    roots: List[float] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _variations(chain, lo) - _variations(chain, hi)
        if count == 0:
            continue
        if count == 1:
            roots.append(_bisect(poly, lo, hi, precision))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(roots)


def _bisect(poly: RationalPoly, lo: Fraction, hi: Fraction, precision: float) -> float:
    """Корень на (lo, hi]; знаки на концах различны либо корень в hi."""
    if poly(hi) == 0:
        return float(hi)
    sign_hi = _sign(poly(hi))
    while hi - lo > precision * max(1, abs(float(hi))):
        mid = (lo + hi) / 2
        value = poly(mid)
        if value == 0:
            return float(mid)
        if _sign(value) == sign_hi:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


def exact_roots(poly: RationalPoly) -> List[float]:
    """Вещественные корни с кратностями через разложение Юна и изоляцию Штурма."""
    roots: List[float] = []
    for factor, multiplicity in squarefree_decomposition(poly):
        for root in isolate_real_roots(factor):
            roots.extend([root] * multiplicity)
    return sorted(roots)


def exact_roots_report(poly: RationalPoly) -> SpectrumReport:
    return SpectrumReport.from_values(exact_roots(poly), source="exact-roots")


def real_poly_roots(poly: Polynomial, imag_tol: float = 1e-6) -> List[float]:
    """
    Корни вещественного многочлена через собственные значения сопровождающей матрицы
    с одним шагом Ньютона на корень.
    """
    poly = poly.trim()
    if poly.degree() < 1:
        return []
    derivative = poly.deriv()
    scale = float(np.max(np.abs(poly.coef)))
    roots = []
    for root in poly.roots():
        if abs(root.imag) > imag_tol * max(1.0, abs(root.real)):
            raise NumericalError(f"Polynomial has a non-real root {root}")
        x = float(root.real)
        slope = derivative(x)
        if slope != 0:
            polished = x - poly(x) / slope
            if abs(poly(polished)) <= abs(poly(x)):
                x = float(polished)
        residual = abs(poly(x))
        if residual > 1e-9 * scale:
            raise NumericalError(f"Root {x:.12g} has residual {residual:.3e} above 1e-9 * {scale:.3e}")
        roots.append(x)
    return sorted(roots)
