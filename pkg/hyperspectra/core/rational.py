"""
Точная рациональная арифметика: разбор и печать "p/q" и плотная матрица из Fraction.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

import numpy as np

from .exceptions import FormatError, SizeMismatchError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Разбор точного рационального числа. Десятичные дроби и float отклоняются."""
    if isinstance(value, bool):
        raise FormatError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match is None:
            raise FormatError(f"Rational must be written as 'p/q' or 'p', got {value!r}")
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise FormatError(f"Zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise FormatError(f"Rational must be a string 'p/q' or an integer, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    """Неизменяемая плотная матрица с точными элементами."""
    rows: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> "RationalMatrix":
        built = tuple(tuple(Fraction(x) for x in row) for row in rows)
        width = {len(row) for row in built}
        if len(width) > 1:
            raise SizeMismatchError("Ragged matrix rows")
        return cls(built)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int = None) -> "RationalMatrix":
        n_cols = n_rows if n_cols is None else n_cols
        return cls(tuple(tuple(Fraction(0) for _ in range(n_cols)) for _ in range(n_rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def order(self) -> int:
        n_rows, n_cols = self.shape
        if n_rows != n_cols:
            raise SizeMismatchError(f"Matrix is {n_rows}x{n_cols}, not square")
        return n_rows

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows))) if self.rows else self

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape[1] != other.shape[0]:
            raise SizeMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns)
            for row in self.rows
        ))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise SizeMismatchError(f"Cannot add {self.shape} and {other.shape}")
        return RationalMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, factor: RationalLike) -> "RationalMatrix":
        factor = Fraction(factor)
        return RationalMatrix(tuple(tuple(factor * x for x in row) for row in self.rows))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.order)), Fraction(0))

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def determinant(self) -> Fraction:
        """Точный определитель исключением Гаусса."""
        n = self.order
        work = [list(row) for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            inv = 1 / work[col][col]
            for r in range(col + 1, n):
                factor = work[r][col] * inv
                if factor:
                    for c in range(col, n):
                        work[r][c] -= factor * work[col][c]
        return det

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows], dtype=float).reshape(self.shape)

    def to_strings(self):
        return [[format_rational(x) for x in row] for row in self.rows]
