"""
Dense rational matrices on numpy object arrays of Fraction.

Elimination runs fraction-free (Bareiss) on an integer copy of the matrix;
reduced row echelon form and kernels are derived from that echelon form.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .rational import as_rational


class RatMatrix:
    """A rows x cols matrix of exact rationals."""

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError("RatMatrix needs a 2-dimensional array")
        self._data = data

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        data = np.empty((rows, cols), dtype=object)
        data.fill(Fraction(0))
        return cls(data)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        matrix = cls.zeros(n, n)
        for i in range(n):
            matrix._data[i, i] = Fraction(1)
        return matrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        matrix = cls.zeros(len(rows), cols)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {cols}")
            for j, value in enumerate(row):
                matrix._data[i, j] = as_rational(value)
        return matrix

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        matrix = cls.zeros(rows, len(columns))
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError(f"column {j} has {len(column)} entries, expected {rows}")
            for i, value in enumerate(column):
                matrix._data[i, j] = as_rational(value)
        return matrix

    @classmethod
    def vstack(cls, blocks: Iterable["RatMatrix"], cols: int) -> "RatMatrix":
        arrays = [block._data for block in blocks if block.rows]
        if not arrays:
            return cls.zeros(0, cols)
        return cls(np.vstack(arrays))

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    def __getitem__(self, key):
        return self._data[key]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def is_zero(self) -> bool:
        return all(entry == 0 for entry in self._data.flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def apply(self, vector: Sequence) -> list[Fraction]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.cols} columns")
        column = np.array([as_rational(v) for v in vector], dtype=object)
        if not self.rows:
            return []
        return list(self._data.dot(column))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if not self.rows or not other.cols:
            return RatMatrix.zeros(self.rows, other.cols)
        if not self.cols:
            return RatMatrix.zeros(self.rows, other.cols)
        return RatMatrix(self._data.dot(other._data))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self._data.T.copy())

    # ------------------------------------------------------------------
    # elimination
    # ------------------------------------------------------------------
    def _integer_rows(self) -> np.ndarray:
        """Scale each row by the lcm of its denominators."""
        integers = np.empty(self.shape, dtype=object)
        for i in range(self.rows):
            scale = lcm(*(entry.denominator for entry in self._data[i])) if self.cols else 1
            for j in range(self.cols):
                entry = self._data[i, j]
                integers[i, j] = entry.numerator * (scale // entry.denominator)
        return integers

    def echelon(self) -> tuple[np.ndarray, list[int]]:
        """Fraction-free (Bareiss) row echelon form with integer entries.

        Returns the echelon array and the pivot columns.
        """
        work = self._integer_rows()
        rows, cols = self.shape
        previous = 1
        pivots: list[int] = []
        r = 0
        for col in range(cols):
            if r >= rows:
                break
            pivot_row = next((i for i in range(r, rows) if work[i, col] != 0), None)
            if pivot_row is None:
                continue
            if pivot_row != r:
                work[[r, pivot_row]] = work[[pivot_row, r]]
            pivot = work[r, col]
            for i in range(r + 1, rows):
                factor = work[i, col]
                work[i, col + 1:] = (pivot * work[i, col + 1:] - factor * work[r, col + 1:]) // previous
                work[i, col] = 0
            previous = pivot
            pivots.append(col)
            r += 1
        return work, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def rref(self) -> tuple["RatMatrix", list[int]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        work, pivots = self.echelon()
        reduced = RatMatrix.zeros(len(pivots), self.cols)
        data = reduced._data
        for i, col in enumerate(pivots):
            pivot = work[i, col]
            for j in range(self.cols):
                data[i, j] = Fraction(work[i, j], pivot)
        for i in range(len(pivots) - 1, -1, -1):
            col = pivots[i]
            for k in range(i):
                factor = data[k, col]
                if factor:
                    data[k, :] = data[k, :] - factor * data[i, :]
        return reduced, pivots

    def solve(self, rhs: Sequence) -> list[Fraction] | None:
        """One exact solution x of self @ x = rhs, or None if inconsistent."""
        augmented = RatMatrix.zeros(self.rows, self.cols + 1)
        augmented._data[:, : self.cols] = self._data
        for i, value in enumerate(rhs):
            augmented._data[i, self.cols] = as_rational(value)
        reduced, pivots = augmented.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        solution = [Fraction(0)] * self.cols
        for i, col in enumerate(pivots):
            solution[col] = reduced[i, self.cols]
        return solution


def kernel_basis(matrix: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space in reduced echelon form (leading entry 1)."""
    cols = matrix.cols
    if matrix.rows:
        reduced, pivots = matrix.rref()
    else:
        reduced, pivots = RatMatrix.zeros(0, cols), []
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    if not free:
        return []
    vectors = []
    for f in free:
        vector = [Fraction(0)] * cols
        vector[f] = Fraction(1)
        for i, col in enumerate(pivots):
            vector[col] = -reduced[i, f]
        vectors.append(vector)
    normalized, _ = RatMatrix.from_rows(vectors, cols).rref()
    return [tuple(row) for row in normalized.to_rows()]
