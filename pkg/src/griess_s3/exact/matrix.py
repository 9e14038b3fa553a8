"""Dense exact matrices and the few linear-algebra routines the algebras need.

Entries are Fractions or Eisenstein numbers; elimination only uses field
operations and equality with zero, so both scalar types go through the same
code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .eisenstein import Eisenstein

Vector = tuple


def _scalar(x):
    if isinstance(x, (Fraction, Eisenstein)):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


class NotDiagonalizableError(ArithmeticError):
    """Eigenspaces over the requested spectrum do not fill the space."""

    def __init__(self, dims: Sequence[int], size: int) -> None:
        self.dims = list(dims)
        self.size = size
        self.defect = size - sum(self.dims)
        super().__init__(
            f"not diagonalizable over given spectrum: eigenspace dims {self.dims} "
            f"sum to {sum(self.dims)}, expected {size} (defect {self.defect})"
        )


class Matrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable]) -> None:
        data = tuple(tuple(_scalar(x) for x in row) for row in entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged matrix")
        self._data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        return cls(zip(*columns))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Matrix([{body}])"

    def __getitem__(self, idx: tuple[int, int]):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix((a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix((a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))

    def __neg__(self) -> Matrix:
        return Matrix((-a for a in r) for r in self._data)

    def __mul__(self, scalar) -> Matrix:
        if isinstance(scalar, Matrix):
            return NotImplemented
        return Matrix((a * scalar for a in r) for r in self._data)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix([[_dot(r, c) for c in cols] for r in self._data])

    def __pow__(self, n: int) -> Matrix:
        if not self.is_square or n < 0:
            raise ValueError("matrix power needs a square matrix and n >= 0")
        out = Matrix.identity(self.rows)
        for _ in range(n):
            out = out @ self
        return out

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix")
        return tuple(_dot(r, v) for r in self._data)

    def transpose(self) -> Matrix:
        return Matrix(zip(*self._data)) if self.rows else Matrix([])

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def submatrix(self, k: int) -> Matrix:
        """Leading principal k x k block."""
        return Matrix(r[:k] for r in self._data[:k])

    def det(self):
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._data]
        n = self.rows
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    f = a[r][col] / p
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def _same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def _dot(a: Sequence, b: Sequence):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            acc = acc + x * y
    return acc


def rref(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m.tolist()]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def kernel(m: Matrix) -> list[Vector]:
    """Basis of the null space ``{v : m v = 0}``, one vector per free column."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -reduced[row][fc]
        basis.append(tuple(v))
    return basis


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def split_eigenspaces(m: Matrix, eigenvalues: Sequence) -> list[list[Vector]]:
    """``ker(m - mu*I)`` for each requested ``mu``.

    Raises NotDiagonalizableError unless the dimensions add up to ``m.rows``.
    """
    if not m.is_square:
        raise ValueError("eigen-splitting needs a square matrix")
    ident = Matrix.identity(m.rows)
    spaces = [kernel(m - ident * mu) for mu in eigenvalues]
    dims = [len(s) for s in spaces]
    if sum(dims) != m.rows:
        raise NotDiagonalizableError(dims, m.rows)
    return spaces


def is_positive_definite(g: Matrix) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    if not g.is_symmetric():
        raise ValueError("positive-definiteness test needs a symmetric matrix")
    return all(g.submatrix(k).det() > 0 for k in range(1, g.rows + 1))


def solve_in_span(basis: Sequence[Sequence], v: Sequence) -> list | None:
    """Coordinates of ``v`` in the span of ``basis`` or None if outside it."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    aug = Matrix([[b[i] for b in basis] + [v[i]] for i in range(len(v))])
    reduced, pivots = rref(aug)
    n = len(basis)
    if n in pivots:
        return None
    coords = [Fraction(0)] * n
    for row, pc in enumerate(pivots):
        coords[pc] = reduced[row][n]
    return coords


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix([list(m.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)])
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix(r[n:] for r in reduced)
