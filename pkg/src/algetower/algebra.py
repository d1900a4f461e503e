"""Finite-dimensional algebras given by structural constants.

Index convention, used everywhere in the package: ``constants[k][i][j]`` is the
coefficient of basis vector ``e_k`` in the product ``e_i * e_j``.  When an
algebra is unital its unit is basis vector ``e_0``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .linalg import SquareMatrix
from .rationals import RationalLike, as_rational, format_rational


class AlgebraError(ValueError):
    """Invalid algebra definition or an operation on mismatched algebras."""


class UnsupportedOperation(AlgebraError):
    pass


class ZeroDivisorError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuaternionParams:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a * self.b == 0:
            raise AlgebraError(f"quaternion parameters need ab != 0, got a={self.a}, b={self.b}")


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    dim: int
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]
    labels: tuple[str, ...]
    unital: bool
    quaternion: QuaternionParams | None = None
    name: str | None = field(default=None, compare=False)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return self.dim == other.dim and self.constants == other.constants

    def __hash__(self):
        return hash((self.dim, self.nonzero_constants))

    def c(self, k: int, i: int, j: int) -> Fraction:
        return self.constants[k][i][j]

    @cached_property
    def nonzero_constants(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        """Sorted ``(k, i, j, value)`` for every nonzero constant."""
        n = self.dim
        return tuple(
            (k, i, j, self.constants[k][i][j])
            for k, i, j in product(range(n), repeat=3)
            if self.constants[k][i][j]
        )

    @cached_property
    def _by_factors(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        out: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for k, i, j, v in self.nonzero_constants:
            out.setdefault((i, j), []).append((k, v))
        return {key: tuple(v) for key, v in out.items()}

    def basis_product(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        """Sparse expansion of ``e_i * e_j`` as ``((k, coefficient), ...)``."""
        return self._by_factors.get((i, j), ())

    def element(self, coords: Iterable[RationalLike]) -> "AlgElement":
        return AlgElement(tuple(as_rational(c) for c in coords), self)

    def basis(self, i: int) -> "AlgElement":
        if not 0 <= i < self.dim:
            raise AlgebraError(f"basis index {i} out of range for dimension {self.dim}")
        return AlgElement(tuple(Fraction(int(k == i)) for k in range(self.dim)), self)

    def zero(self) -> "AlgElement":
        return AlgElement((Fraction(0),) * self.dim, self)

    def one(self) -> "AlgElement":
        if not self.unital:
            raise UnsupportedOperation("algebra has no unit at basis index 0")
        return self.basis(0)

    def __repr__(self):
        tag = self.name or f"dim={self.dim}"
        return f"AlgebraTable({tag})"


def _is_unital(dim: int, constants) -> bool:
    for k, j in product(range(dim), repeat=2):
        delta = Fraction(int(k == j))
        if constants[k][0][j] != delta or constants[k][j][0] != delta:
            return False
    return True


def make_algebra(dim: int, entries: Iterable[Sequence], labels: Sequence[str] | None = None,
                 name: str | None = None, quaternion: QuaternionParams | None = None) -> AlgebraTable:
    """Dense table from sparse ``(k, i, j, value)`` entries; unitality is detected."""
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise AlgebraError(f"dimension must be a positive integer, got {dim!r}")
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for entry in entries:
        if len(entry) != 4:
            raise AlgebraError(f"constant entry must be (k, i, j, value), got {entry!r}")
        k, i, j, value = entry
        for idx in (k, i, j):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < dim:
                raise AlgebraError(f"index out of range in entry {list(entry)!r} for dimension {dim}")
        if (k, i, j) in seen:
            raise AlgebraError(f"duplicate constant for (k, i, j) = {(k, i, j)}")
        seen.add((k, i, j))
        table[k][i][j] = as_rational(value)
    constants = tuple(tuple(tuple(row) for row in mat) for mat in table)
    if labels is None:
        labels = [f"e{i}" for i in range(dim)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != dim:
        raise AlgebraError(f"expected {dim} basis labels, got {len(labels)}")
    return AlgebraTable(dim, constants, labels, _is_unital(dim, constants), quaternion, name)


# --------------------------------------------------------------------------
# builtin algebras
# --------------------------------------------------------------------------

def builtin_real() -> AlgebraTable:
    return make_algebra(1, [(0, 0, 0, 1)], ["1"], name="R")


def builtin_complex() -> AlgebraTable:
    entries = [(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1), (0, 1, 1, -1)]
    return make_algebra(2, entries, ["1", "i"], name="C")


def builtin_quaternion(a: RationalLike = -1, b: RationalLike = -1) -> AlgebraTable:
    """The algebra with i² = a, j² = b, ij = k = -ji over the rationals."""
    params = QuaternionParams(a, b)
    a, b = params.a, params.b
    entries = [
        (0, 0, 0, 1), (1, 0, 1, 1), (2, 0, 2, 1), (3, 0, 3, 1),
        (1, 1, 0, 1), (0, 1, 1, a), (3, 1, 2, 1), (2, 1, 3, a),
        (2, 2, 0, 1), (3, 2, 1, -1), (0, 2, 2, b), (1, 2, 3, -b),
        (3, 3, 0, 1), (2, 3, 1, -a), (1, 3, 2, b), (0, 3, 3, -a * b),
    ]
    name = "H" if (a, b) == (-1, -1) else f"E({format_rational(a)},{format_rational(b)})"
    return make_algebra(4, entries, ["1", "i", "j", "k"], name=name, quaternion=params)


def builtin_H() -> AlgebraTable:
    return builtin_quaternion(-1, -1)


def detect_quaternion(A: AlgebraTable) -> AlgebraTable:
    """Return A tagged with quaternion parameters if its table is of that form."""
    if A.quaternion is not None or A.dim != 4:
        return A
    a, b = A.c(0, 1, 1), A.c(0, 2, 2)
    if a * b == 0:
        return A
    candidate = builtin_quaternion(a, b)
    if candidate.constants != A.constants:
        return A
    return AlgebraTable(A.dim, A.constants, A.labels, A.unital, candidate.quaternion, A.name or candidate.name)


# --------------------------------------------------------------------------
# elements
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgElement:
    coords: tuple[Fraction, ...]
    algebra: AlgebraTable = field(repr=False)

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise AlgebraError(f"{len(self.coords)} coordinates for an algebra of dimension {self.algebra.dim}")

    def _check(self, other: "AlgElement") -> None:
        if not isinstance(other, AlgElement):
            raise TypeError(f"expected AlgElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgElement(tuple(a + b for a, b in zip(self.coords, other.coords)), self.algebra)

    def __sub__(self, other):
        self._check(other)
        return AlgElement(tuple(a - b for a, b in zip(self.coords, other.coords)), self.algebra)

    def __neg__(self):
        return AlgElement(tuple(-a for a in self.coords), self.algebra)

    def scale(self, c: RationalLike) -> "AlgElement":
        c = as_rational(c)
        return AlgElement(tuple(c * a for a in self.coords), self.algebra)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        terms = []
        for c, label in zip(self.coords, self.algebra.labels):
            if not c:
                continue
            coef = format_rational(c)
            terms.append(coef if label == "1" else f"{coef}*{label}")
        return " + ".join(terms) if terms else "0"


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    """(x·y)^k = x^i y^j C[k][i][j]."""
    x._check(y)
    A = x.algebra
    out = [Fraction(0)] * A.dim
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            w = xi * yj
            for k, c in A.basis_product(i, j):
                out[k] += w * c
    return AlgElement(tuple(out), A)


def _require_quaternion(A: AlgebraTable) -> QuaternionParams:
    if A.quaternion is None:
        raise UnsupportedOperation(f"operation defined only for quaternion algebras, not {A!r}")
    return A.quaternion


def conjugate(x: AlgElement) -> AlgElement:
    _require_quaternion(x.algebra)
    c = x.coords
    return AlgElement((c[0], -c[1], -c[2], -c[3]), x.algebra)


def norm_sq(x: AlgElement) -> Fraction:
    p = _require_quaternion(x.algebra)
    x0, x1, x2, x3 = x.coords
    return x0 * x0 - p.a * x1 * x1 - p.b * x2 * x2 + p.a * p.b * x3 * x3


def invert(x: AlgElement) -> AlgElement:
    n = norm_sq(x)
    if n == 0:
        raise ZeroDivisorError(f"{x} has zero norm and is not invertible")
    return conjugate(x).scale(1 / n)


def rotate_vector(q: AlgElement, v: Sequence[RationalLike]) -> tuple[Fraction, Fraction, Fraction]:
    """Vector part of q (v¹i + v²j + v³k) q⁻¹ in H."""
    p = _require_quaternion(q.algebra)
    if (p.a, p.b) != (-1, -1):
        raise UnsupportedOperation("rotations are defined for the classical quaternions only")
    if len(v) != 3:
        raise ValueError(f"expected a 3-vector, got {len(v)} components")
    pure = q.algebra.element([0, *v])
    image = multiply(multiply(q, pure), invert(q))
    if image.coords[0] != 0:
        raise AssertionError("rotation produced a nonzero scalar part")
    return image.coords[1], image.coords[2], image.coords[3]


def rotation_matrix_float(q: Sequence[float]) -> list[list[float]]:
    w, x, y, z = (float(c) for c in q)
    return [
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ]


def rotation_angle_check(q: Sequence[float], tol: float = 1e-9) -> float:
    """Rotation angle of the 3×3 matrix induced by a unit quaternion.

    The angle is arccos((trace - 1) / 2); it is evaluated as atan2 of the
    sine (from the antisymmetric part) and that cosine, which is the same
    value without arccos' loss of precision near 0 and π.
    """
    if len(q) != 4:
        raise ValueError("expected 4 quaternion components")
    norm = math.sqrt(sum(float(c) ** 2 for c in q))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"quaternion is not a unit quaternion (|q| = {norm!r})")
    R = rotation_matrix_float(q)
    cos_theta = (R[0][0] + R[1][1] + R[2][2] - 1) / 2
    sin_theta = 0.5 * math.sqrt((R[2][1] - R[1][2]) ** 2 + (R[0][2] - R[2][0]) ** 2 + (R[1][0] - R[0][1]) ** 2)
    return math.atan2(sin_theta, cos_theta)


# --------------------------------------------------------------------------
# multiplication operators and structure checks
# --------------------------------------------------------------------------

def left_mul_matrix(a: AlgElement) -> SquareMatrix:
    """Matrix of x ↦ a·x: M[i][j] = C[i][k][j] a^k."""
    A = a.algebra
    rows = [[Fraction(0)] * A.dim for _ in range(A.dim)]
    for k, ak in enumerate(a.coords):
        if not ak:
            continue
        for j in range(A.dim):
            for i, c in A.basis_product(k, j):
                rows[i][j] += c * ak
    return SquareMatrix(tuple(tuple(r) for r in rows))


def right_mul_matrix(a: AlgElement) -> SquareMatrix:
    """Matrix of x ↦ x·a: M[i][j] = C[i][j][k] a^k."""
    A = a.algebra
    rows = [[Fraction(0)] * A.dim for _ in range(A.dim)]
    for k, ak in enumerate(a.coords):
        if not ak:
            continue
        for j in range(A.dim):
            for i, c in A.basis_product(j, k):
                rows[i][j] += c * ak
    return SquareMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class StructureReport:
    unital: bool
    commutative: bool
    associative: bool

    def as_dict(self) -> dict[str, bool]:
        return {"associative": self.associative, "commutative": self.commutative, "unital": self.unital}


def _basis_times_sparse(A: AlgebraTable, vec: dict[int, Fraction], j: int, left: bool) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for p, w in vec.items():
        pair = (p, j) if left else (j, p)
        for k, c in A.basis_product(*pair):
            out[k] = out.get(k, 0) + w * c
    return {k: v for k, v in out.items() if v}


def structure_checks(A: AlgebraTable) -> StructureReport:
    """Exhaustive check over basis pairs and triples."""
    n = A.dim
    commutative = all(A.basis_product(i, j) == A.basis_product(j, i) for i in range(n) for j in range(i + 1, n))
    associative = True
    for i, j in product(range(n), repeat=2):
        ij = dict(A.basis_product(i, j))
        for k in range(n):
            lhs = _basis_times_sparse(A, ij, k, left=True)
            rhs_inner = dict(A.basis_product(j, k))
            rhs = _basis_times_sparse(A, rhs_inner, i, left=False)
            if lhs != rhs:
                associative = False
                break
        if not associative:
            break
    return StructureReport(A.unital, commutative, associative)


def center_dimension(A: AlgebraTable) -> int:
    """Dimension of {z : z·x = x·z for all x}."""
    from .linalg import rank
    n = A.dim
    rows = []
    for x in range(n):
        # (z e_x - e_x z)^k = z^p (C[k][p][x] - C[k][x][p])
        for k in range(n):
            row = {}
            for p in range(n):
                v = A.c(k, p, x) - A.c(k, x, p)
                if v:
                    row[p] = v
            if row:
                rows.append(row)
    return n - rank(rows)


# --------------------------------------------------------------------------
# JSON interchange
# --------------------------------------------------------------------------

def algebra_to_json(A: AlgebraTable) -> dict:
    return {
        "dim": A.dim,
        "labels": list(A.labels),
        "constants": [[k, i, j, format_rational(v)] for k, i, j, v in A.nonzero_constants],
    }


def algebra_from_json(data) -> AlgebraTable:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise AlgebraError("algebra definition must be a JSON object")
    for key in ("dim", "constants"):
        if key not in data:
            raise AlgebraError(f"algebra definition is missing {key!r}")
    dim = data["dim"]
    constants = data["constants"]
    if not isinstance(constants, list):
        raise AlgebraError("'constants' must be a list of [k, i, j, value]")
    entries = []
    for entry in constants:
        if not isinstance(entry, list) or len(entry) != 4:
            raise AlgebraError(f"constant entry must be [k, i, j, value], got {entry!r}")
        k, i, j, v = entry
        if isinstance(v, (int, str)) and not isinstance(v, bool):
            entries.append((k, i, j, as_rational(v)))
        else:
            raise AlgebraError(f"constant value must be an integer or 'p/q' text, got {v!r}")
    return detect_quaternion(make_algebra(dim, entries, data.get("labels")))
