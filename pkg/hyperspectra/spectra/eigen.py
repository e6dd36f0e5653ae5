"""
Численный спектр: циклический метод вращений Якоби для плотных симметричных матриц.
"""
import logging
import math
from typing import List, Literal, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from hyperspectra.core.config import settings
from hyperspectra.core.exceptions import NotSymmetricError, NoConvergenceError, NotConnectedError
from hyperspectra.core.hypergraph import Hypergraph, is_connected
from hyperspectra.core.rational import RationalMatrix

logger = logging.getLogger("hyperspectra")

MatrixLike = Union[RationalMatrix, np.ndarray, Sequence[Sequence[float]]]


class EigenvalueEntry(BaseModel):
    value: float
    multiplicity: int = Field(ge=1)


class SpectrumReport(BaseModel):
    """Отсортированное мультимножество собственных значений с кратностями"""
    eigenvalues: List[EigenvalueEntry] = []
    source: Literal["numeric", "closed-form", "exact-roots"] = "numeric"
    tolerance: float = 1e-7
    order: int = 0

    @classmethod
    def from_values(cls, values: Sequence[float], source: str = "numeric",
                    tolerance: float = None) -> "SpectrumReport":
        tolerance = settings.GROUP_TOL if tolerance is None else tolerance
        groups = group_eigenvalues(values, tolerance)
        return cls(
            eigenvalues=[EigenvalueEntry(value=v, multiplicity=k) for v, k in groups],
            source=source,
            tolerance=tolerance,
            order=len(values),
        )

    def values(self) -> List[float]:
        return [entry.value for entry in self.eigenvalues for _ in range(entry.multiplicity)]

    def multiplicity_of(self, value: float, tol: float = None) -> int:
        tol = self.tolerance if tol is None else tol
        return sum(e.multiplicity for e in self.eigenvalues if abs(e.value - value) <= tol)


def group_eigenvalues(values: Sequence[float], tol: float) -> List[Tuple[float, int]]:
    """Группировка отсортированных значений: соседние ближе tol попадают в одну группу."""
    groups: List[List[float]] = []
    for value in sorted(float(v) for v in values):
        if groups and value - groups[-1][-1] <= tol:
            groups[-1].append(value)
        else:
            groups.append([value])
    return [(sum(g) / len(g), len(g)) for g in groups]


def as_float_matrix(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, RationalMatrix):
        return matrix.to_numpy()
    return np.array(matrix, dtype=float)


def jacobi_eigh(matrix: MatrixLike, tol: float = None,
                max_sweeps: int = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Циклический Якоби: обход пар (p, q) в фиксированном порядке до тех пор, пока
    внедиагональная норма Фробениуса не станет < tol * (1 + ||M||_F).

    Returns:
        (значения по возрастанию, собственные векторы по столбцам)
    """
    tol = settings.JACOBI_TOL if tol is None else tol
    max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps
    a = as_float_matrix(matrix).copy()
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError(f"Matrix of shape {a.shape} is not square")
    n = a.shape[0]
    if n and np.max(np.abs(a - a.T)) > 1e-12:
        raise NotSymmetricError("Matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2
    v = np.eye(n)
    threshold = tol * (1.0 + np.linalg.norm(a))

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < threshold:
            logger.debug(f"Якоби: сходимость за {sweep} проходов, n={n}")
            break
        if sweep == max_sweeps:
            raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    # theta**2 переполняется
                    t = 1.0 / (2.0 * theta)
                else:
                    sign = 1.0 if theta >= 0 else -1.0
                    t = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def eig_sym(matrix: MatrixLike, tol: float = None) -> SpectrumReport:
    values, _ = jacobi_eigh(matrix, tol)
    return SpectrumReport.from_values(values.tolist(), source="numeric")


def hypergraph_spectrum(h: Hypergraph) -> List[float]:
    """Отсортированный численный спектр A_H."""
    values, _ = jacobi_eigh(h.adjacency)
    return values.tolist()


def max_deviation(predicted: Sequence[float], observed: Sequence[float]) -> float:
    """Максимальное отклонение отсортированных мультимножеств; inf при разной длине."""
    if len(predicted) != len(observed):
        return math.inf
    if not predicted:
        return 0.0
    return float(np.max(np.abs(np.sort(np.asarray(predicted, float)) - np.sort(np.asarray(observed, float)))))


def perron(h: Hypergraph) -> float:
    """Наибольшее собственное значение связного гиперграфа с проверкой простоты и знака вектора."""
    if not is_connected(h):
        raise NotConnectedError(f"{h.label or 'hypergraph'} is not connected")
    values, vectors = jacobi_eigh(h.adjacency)
    top = float(values[-1])
    if h.n > 1 and top - float(values[-2]) <= 1e-9:
        logger.warning(f"Перронов корень {top:.12g} не простой для {h.label or 'гиперграфа'}")
    vector = vectors[:, -1]
    if vector.sum() < 0:
        vector = -vector
    if np.min(vector) < -1e-9:
        logger.warning(f"Перронов вектор имеет отрицательные компоненты для {h.label or 'гиперграфа'}")
    return top


def perron_is_simple(h: Hypergraph, gap: float = 1e-9) -> bool:
    values, vectors = jacobi_eigh(h.adjacency)
    vector = vectors[:, -1]
    if vector.sum() < 0:
        vector = -vector
    simple = h.n == 1 or float(values[-1] - values[-2]) > gap
    return simple and bool(np.min(vector) > -1e-9)
