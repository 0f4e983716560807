"""Sparse matrices over exact rationals.

Entries are :class:`fractions.Fraction`; zero entries are never stored, so
structural equality is exact equality.  Row and column indices are 1-based.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Entry = tuple[int, int, Fraction]


class DimensionError(ValueError):
    pass


class NotAnEigencolumn(ValueError):
    """Column k has support outside row k."""


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"exact rational expected, got {type(value).__name__}")
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class ExactMatrix:
    """Immutable sparse rational matrix."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | Iterable[tuple[int, int, object]] = ()):
        if rows < 0 or cols < 0:
            raise DimensionError("negative dimension")
        self.rows = rows
        self.cols = cols
        self._hash = None
        data: dict[int, dict[int, Fraction]] = {}
        if isinstance(entries, Mapping):
            entries = ((i, j, v) for (i, j), v in entries.items())
        for i, j, v in entries:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = as_scalar(v)
            row = data.setdefault(i, {})
            total = row.get(j, 0) + v
            if total:
                row[j] = total
            else:
                row.pop(j, None)
                if not row:
                    del data[i]
        self._data = data

    @classmethod
    def _from_rows(cls, rows: int, cols: int, data: dict[int, dict[int, Fraction]]) -> "ExactMatrix":
        # caller guarantees canonical form (no zeros, no empty rows)
        obj = cls.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj._data = data
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls._from_rows(size, size, {i: {i: Fraction(1)} for i in range(1, size + 1)})

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self._data.get(i, {}).get(j, Fraction(0))

    def entries(self) -> Iterator[Entry]:
        """Nonzero entries in row-major order."""
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield (i, j, row[j])

    def row(self, i: int) -> dict[int, Fraction]:
        return dict(self._data.get(i, {}))

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(set(row) == {i} for i, row in self._data.items())

    def diagonal(self) -> list[Fraction]:
        """Diagonal entries, index 0 holding entry (1, 1)."""
        return [self._data.get(i, {}).get(i, Fraction(0)) for i in range(1, min(self.rows, self.cols) + 1)]

    def scalar_value(self) -> Fraction | None:
        """c if self == c * I, else None."""
        if not self.is_square() or not self.is_diagonal():
            return None
        values = set(self.diagonal())
        if len(values) == 1:
            return values.pop()
        return None

    def eigenvalue_on_basis_vector(self, k: int) -> Fraction:
        """Diagonal entry at k when column k is supported only at row k.

        A zero column is an eigencolumn with eigenvalue 0.  Raises
        :class:`NotAnEigencolumn` otherwise and IndexError for bad k.
        """
        if not self.is_square():
            raise DimensionError("eigenvalue of a non-square matrix")
        if not 1 <= k <= self.cols:
            raise IndexError(f"column {k} outside 1..{self.cols}")
        for i, row in self._data.items():
            if i != k and k in row:
                raise NotAnEigencolumn(f"column {k} has entry in row {i}")
        return self._data.get(k, {}).get(k, Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.add_scaled(other, 1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.add_scaled(other, -1)

    def add_scaled(self, other: "ExactMatrix", coeff) -> "ExactMatrix":
        """self + coeff * other."""
        self._check_same_shape(other)
        coeff = as_scalar(coeff)
        data = {i: dict(row) for i, row in self._data.items()}
        if coeff:
            for i, orow in other._data.items():
                row = data.setdefault(i, {})
                for j, v in orow.items():
                    total = row.get(j, 0) + coeff * v
                    if total:
                        row[j] = total
                    else:
                        row.pop(j, None)
                if not row:
                    del data[i]
        return ExactMatrix._from_rows(self.rows, self.cols, data)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, coeff) -> "ExactMatrix":
        coeff = as_scalar(coeff)
        if not coeff:
            return ExactMatrix(self.rows, self.cols)
        data = {i: {j: coeff * v for j, v in row.items()} for i, row in self._data.items()}
        return ExactMatrix._from_rows(self.rows, self.cols, data)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        odata = other._data
        data: dict[int, dict[int, Fraction]] = {}
        for i, row in self._data.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                orow = odata.get(k)
                if orow is None:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return ExactMatrix._from_rows(self.rows, other.cols, data)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        return NotImplemented

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, ((j, i, v) for i, j, v in self.entries()))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(self.entries())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for i, j, v in self.entries())
        return f"ExactMatrix({self.rows}x{self.cols}, {{{body}}})"

    def to_dense(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(1, self.cols + 1)] for i in range(1, self.rows + 1)]

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[i, j, format_scalar(v)] for i, j, v in self.entries()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "ExactMatrix":
        return cls(int(obj["rows"]), int(obj["cols"]), ((int(i), int(j), Fraction(v)) for i, j, v in obj["entries"]))


def mat_add(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a + b


def mat_scale(a: ExactMatrix, coeff) -> ExactMatrix:
    return a.scale(coeff)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def elementary(r: int, i: int, j: int) -> ExactMatrix:
    if not (1 <= i <= r and 1 <= j <= r):
        raise IndexError(f"elementary index ({i}, {j}) outside [1, {r}]")
    return ExactMatrix._from_rows(r, r, {i: {j: Fraction(1)}})


def diagonal_from(values: Iterable) -> ExactMatrix:
    values = [as_scalar(v) for v in values]
    return ExactMatrix(len(values), len(values), ((k, k, v) for k, v in enumerate(values, start=1)))


def graded_bracket(a: ExactMatrix, b: ExactMatrix, sign: int) -> ExactMatrix:
    """ab - (-1)**sign * ba: commutator for sign 0, anticommutator for 1."""
    if sign not in (0, 1):
        raise ValueError(f"sign exponent must be 0 or 1, got {sign!r}")
    if not (a.is_square() and a.shape == b.shape):
        raise DimensionError(f"bracket needs equal square shapes, got {a.shape} and {b.shape}")
    return (a @ b).add_scaled(b @ a, 1 if sign else -1)
