"""Exact linear algebra over the rationals.

Matrices here are small and dense (:class:`SquareMatrix`); the linear systems
built from them (commutation constraints, standard-component blocks) are large
but very sparse, so elimination works on rows stored as ``{column: value}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rationals import as_rational, format_rational

SparseRow = dict[int, Fraction]


class SingularSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SquareMatrix:
    """n×n rational matrix; ``rows[i][j]`` is the entry in row i, column j."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in a {n}-row matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "SquareMatrix":
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "SquareMatrix":
        return cls(tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries: Sequence) -> "SquareMatrix":
        """Build from a flat row-major sequence of n² values."""
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(entries)}")
        return cls.from_rows(entries[i * n:(i + 1) * n] for i in range(n))

    @classmethod
    def from_sparse(cls, n: int, values: Mapping[tuple[int, int], Fraction]) -> "SquareMatrix":
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in values.items():
            rows[i][j] = Fraction(v)
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(v for row in self.rows for v in row)

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vector) != self.n:
            raise ValueError(f"vector of length {len(vector)} for a {self.n}×{self.n} matrix")
        return tuple(sum((a * x for a, x in zip(row, vector) if a), Fraction(0)) for row in self.rows)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().rows
        return SquareMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
            for row in self.rows
        ))

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch in matrix sum")
        return SquareMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        return self + (-other)

    def scale(self, c) -> "SquareMatrix":
        c = as_rational(c)
        return SquareMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def __rmul__(self, c) -> "SquareMatrix":
        return self.scale(c)

    def to_text(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.rows]

    def __str__(self) -> str:
        cells = self.to_text()
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


# --------------------------------------------------------------------------
# sparse Gauss-Jordan elimination
# --------------------------------------------------------------------------

def _axpy(target: SparseRow, factor: Fraction, source: SparseRow) -> None:
    """target -= factor * source, dropping exact zeros."""
    for col, v in source.items():
        new = target.get(col, 0) - factor * v
        if new:
            target[col] = new
        else:
            target.pop(col, None)


def rref(rows: Iterable[Mapping[int, Fraction]]) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of a sparse system.

    Returns the nonzero RREF rows sorted by pivot and the pivot columns.  Each
    pivot row has a 1 in its pivot column and 0 in every other pivot column.
    """
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        row: SparseRow = {c: Fraction(v) for c, v in raw.items() if v}
        for col in [c for c in row if c in pivots]:
            factor = row.get(col)
            if factor:
                _axpy(row, factor, pivots[col])
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        for prow in pivots.values():
            factor = prow.get(lead)
            if factor:
                _axpy(prow, factor, row)
        pivots[lead] = row
    order = sorted(pivots)
    return [pivots[c] for c in order], order


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0}, one vector per free column in increasing order."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for prow, p in zip(reduced, pivots):
            v = prow.get(free)
            if v:
                vec[p] = -v
        basis.append(tuple(vec))
    return basis


def canonical_basis(vectors: Sequence[Sequence[Fraction]]) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Canonical (reduced echelon) basis of the span of ``vectors``.

    Returns the basis and its pivot coordinates.  Raises ValueError if the
    input vectors are linearly dependent.
    """
    if not vectors:
        return [], []
    ncols = len(vectors[0])
    reduced, pivots = rref({i: v for i, v in enumerate(vec) if v} for vec in vectors)
    if len(pivots) != len(vectors):
        raise ValueError(f"vectors are linearly dependent: rank {len(pivots)} < {len(vectors)}")
    dense = [tuple(row.get(c, Fraction(0)) for c in range(ncols)) for row in reduced]
    return dense, pivots


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Unique solution of a square system; SingularSystemError otherwise."""
    n = len(matrix)
    if any(len(r) != n for r in matrix) or len(rhs) != n:
        raise ValueError("solve expects a square system")
    augmented = []
    for row, b in zip(matrix, rhs):
        r = {c: Fraction(v) for c, v in enumerate(row) if v}
        if b:
            r[n] = Fraction(b)
        augmented.append(r)
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise SingularSystemError(f"singular {n}×{n} system (rank {len([p for p in pivots if p < n])})")
    return tuple(row.get(n, Fraction(0)) for row in reduced)


def rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    return len(rref(rows)[1])
