"""Quaternion polynomial functions and Fueter-type regularity tests.

A function H → H is held as four commutative polynomials in the real
coordinates x0..x3.  Functions are usually built from noncommutative
monomials c0·x·c1·x·…·cm with constant quaternions c, which are expanded
through the structural constants of H.

Jacobians use the convention of :mod:`algetower.linear_maps`:
``J[i][j] = ∂f^i/∂x^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence, Union

from .algebra import AlgebraError, AlgElement, UnsupportedOperation, builtin_H, multiply
from .linalg import SquareMatrix
from .linear_maps import matrix_to_standard
from .polynomials import CoordPolynomial, coordinate_variables
from .rationals import RationalLike, as_rational, format_rational, parse_rational

H = builtin_H()

VARIABLE = "x"

Factor = Union[str, Sequence[RationalLike], AlgElement]
Monomial = Sequence[Factor]
Entry = tuple[int, int]


class FunctionSpecError(AlgebraError):
    pass


# --------------------------------------------------------------------------
# polynomial functions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class QuaternionPolynomial:
    """A polynomial map H → H given by its four coordinate polynomials."""

    coords: tuple[CoordPolynomial, CoordPolynomial, CoordPolynomial, CoordPolynomial]

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError(f"expected 4 coordinate polynomials, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def zero(cls) -> "QuaternionPolynomial":
        return cls((CoordPolynomial(),) * 4)

    @classmethod
    def constant(cls, q: Sequence[RationalLike] | AlgElement) -> "QuaternionPolynomial":
        q = _as_quaternion(q)
        return cls(tuple(CoordPolynomial.constant(c) for c in q.coords))

    @classmethod
    def identity(cls) -> "QuaternionPolynomial":
        return cls(coordinate_variables())

    def __add__(self, other: "QuaternionPolynomial") -> "QuaternionPolynomial":
        return QuaternionPolynomial(tuple(p + q for p, q in zip(self.coords, other.coords)))

    def __neg__(self) -> "QuaternionPolynomial":
        return QuaternionPolynomial(tuple(-p for p in self.coords))

    def __sub__(self, other: "QuaternionPolynomial") -> "QuaternionPolynomial":
        return self + (-other)

    def scale(self, c: RationalLike) -> "QuaternionPolynomial":
        c = as_rational(c)
        return QuaternionPolynomial(tuple(p * c for p in self.coords))

    def __mul__(self, other):
        """Quaternion product of two functions, or scaling by a rational."""
        if not isinstance(other, QuaternionPolynomial):
            return self.scale(other)
        out = [CoordPolynomial() for _ in range(4)]
        for k, i, j, c in H.nonzero_constants:
            out[k] = out[k] + self.coords[i] * other.coords[j] * c
        return QuaternionPolynomial(tuple(out))

    def __rmul__(self, c):
        return self.scale(c)

    def __call__(self, point: Sequence[RationalLike]) -> AlgElement:
        return H.element(p(point) for p in self.coords)

    def partial(self, var: int) -> "QuaternionPolynomial":
        return QuaternionPolynomial(tuple(p.diff(var) for p in self.coords))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coords)

    def degree(self) -> int:
        return max(p.degree() for p in self.coords)

    def to_text(self) -> list[str]:
        return [str(p) for p in self.coords]

    def __str__(self):
        return "(" + ", ".join(self.to_text()) + ")"


def _as_quaternion(q) -> AlgElement:
    if isinstance(q, AlgElement):
        if q.algebra != H:
            raise UnsupportedOperation("constants must be elements of H")
        return q
    if isinstance(q, str) or len(q) != 4:
        raise FunctionSpecError(f"a quaternion constant needs 4 coordinates, got {q!r}")
    return H.element(as_rational(parse_rational(c) if isinstance(c, str) else c) for c in q)


def _factor(item: Factor) -> QuaternionPolynomial:
    if isinstance(item, str):
        if item != VARIABLE:
            raise FunctionSpecError(f"unknown factor {item!r}; use {VARIABLE!r} for the variable")
        return QuaternionPolynomial.identity()
    return QuaternionPolynomial.constant(item)


def build_polynomial(monomials: Iterable[Monomial]) -> QuaternionPolynomial:
    """Sum of noncommutative monomials.

    Each monomial is a sequence of factors, each either ``"x"`` or a constant
    quaternion (4 rationals), multiplied left to right.  The usual shape is
    c0, x, c1, x, …, cm; a missing constant between two ``x`` is read as 1.
    An empty list gives the zero function.
    """
    total = QuaternionPolynomial.zero()
    for mono in monomials:
        if isinstance(mono, str) or not len(mono):
            raise FunctionSpecError(f"a monomial must be a non-empty list of factors, got {mono!r}")
        term = _factor(mono[0])
        for item in mono[1:]:
            term = term * _factor(item)
        total = total + term
    return total


def evaluate_monomials(monomials: Iterable[Monomial], point: Sequence[RationalLike]) -> AlgElement:
    """Evaluate the monomial sum at a point by direct quaternion multiplication."""
    x = H.element(point)
    total = H.zero()
    for mono in monomials:
        values = [x if isinstance(item, str) and item == VARIABLE else _as_quaternion(item) for item in mono]
        term = values[0]
        for v in values[1:]:
            term = multiply(term, v)
        total = total + term
    return total


def parse_function(data) -> list[list[Factor]]:
    """Read the JSON monomial format ``[[[c0], "x", [c1]], ...]``.

    A constant is a list of 4 rational literals (strings or integers).
    """
    if not isinstance(data, list):
        raise FunctionSpecError("function must be a JSON list of monomials")
    monomials = []
    for m, mono in enumerate(data):
        if not isinstance(mono, list) or not mono:
            raise FunctionSpecError(f"monomial {m} must be a non-empty list")
        factors: list[Factor] = []
        for item in mono:
            if isinstance(item, str):
                if item != VARIABLE:
                    raise FunctionSpecError(f"monomial {m}: unknown factor {item!r}")
                factors.append(item)
            elif isinstance(item, list) and len(item) == 4:
                coords = []
                for c in item:
                    if isinstance(c, bool) or not isinstance(c, (int, str)):
                        raise FunctionSpecError(f"monomial {m}: constant entries must be rational text, got {c!r}")
                    coords.append(parse_rational(c) if isinstance(c, str) else Fraction(c))
                factors.append(tuple(coords))
            else:
                raise FunctionSpecError(f"monomial {m}: factor must be \"x\" or a list of 4 rationals, got {item!r}")
        monomials.append(factors)
    return monomials


def function_to_json(monomials: Iterable[Monomial]) -> list:
    out = []
    for mono in monomials:
        row = []
        for item in mono:
            if isinstance(item, str):
                row.append(item)
            else:
                row.append([format_rational(c) for c in _as_quaternion(item).coords])
        out.append(row)
    return out


_HALF = Fraction(-1, 2)

# monomial forms of the builtin functions
BUILTIN_MONOMIALS: dict[str, list[list[Factor]]] = {
    "zero": [],
    "one": [[(1, 0, 0, 0)]],
    "identity": [["x"]],
    "square": [["x", "x"]],
    "cube": [["x", "x", "x"]],
    # x̄ = -1/2 (x + ixi + jxj + kxk)
    "conjugation": [[(_HALF, 0, 0, 0), "x"], [(0, _HALF, 0, 0), "x", (0, 1, 0, 0)],
                    [(0, 0, _HALF, 0), "x", (0, 0, 1, 0)], [(0, 0, 0, _HALF), "x", (0, 0, 0, 1)]],
    # x^1 - i x^0 = -1/2 (ix + xi), and likewise for j, k
    "fueter1": [[(0, _HALF, 0, 0), "x"], ["x", (0, _HALF, 0, 0)]],
    "fueter2": [[(0, 0, _HALF, 0), "x"], ["x", (0, 0, _HALF, 0)]],
    "fueter3": [[(0, 0, 0, _HALF), "x"], ["x", (0, 0, 0, _HALF)]],
}


def builtin_function(name: str) -> QuaternionPolynomial:
    if name not in BUILTIN_MONOMIALS:
        raise FunctionSpecError(f"unknown builtin function {name!r}; choose from {', '.join(sorted(BUILTIN_MONOMIALS))}")
    return build_polynomial(BUILTIN_MONOMIALS[name])


def left_linear(a: Sequence[RationalLike] | AlgElement) -> QuaternionPolynomial:
    """x ↦ a·x"""
    return build_polynomial([[a, VARIABLE]])


def right_linear(a: Sequence[RationalLike] | AlgElement) -> QuaternionPolynomial:
    """x ↦ x·a"""
    return build_polynomial([[VARIABLE, a]])


# --------------------------------------------------------------------------
# Jacobians and the Fueter system
# --------------------------------------------------------------------------

def jacobian_polynomials(f: QuaternionPolynomial) -> tuple[tuple[CoordPolynomial, ...], ...]:
    return tuple(tuple(f.coords[i].diff(j) for j in range(4)) for i in range(4))


def jacobian(f: QuaternionPolynomial, point: Sequence[RationalLike]) -> SquareMatrix:
    point = [as_rational(v) for v in point]
    return SquareMatrix(tuple(tuple(p(point) for p in row) for row in jacobian_polynomials(f)))


def fueter_operator(f: QuaternionPolynomial) -> QuaternionPolynomial:
    """∂f/∂x0 + i ∂f/∂x1 + j ∂f/∂x2 + k ∂f/∂x3, as a polynomial function."""
    total = f.partial(0)
    for j in range(1, 4):
        total = total + QuaternionPolynomial.constant(H.basis(j).coords) * f.partial(j)
    return total


def fueter_system(J):
    """The four left-hand sides of the Fueter system for a 4×4 Jacobian table.

    Works for matrices of rationals and for tables of CoordPolynomials.
    """
    J = J.rows if isinstance(J, SquareMatrix) else J
    return (
        J[0][0] - J[1][1] - J[2][2] - J[3][3],
        J[1][0] + J[0][1] - J[2][3] + J[3][2],
        J[2][0] + J[0][2] + J[1][3] - J[3][1],
        J[3][0] + J[0][3] + J[2][1] - J[1][2],
    )


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, CoordPolynomial) else v == 0


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    residuals: tuple  # Fractions (pointwise) or CoordPolynomials (everywhere)
    operator: object  # AlgElement (pointwise) or QuaternionPolynomial (everywhere)


def check_regular(f: QuaternionPolynomial, point: Sequence[RationalLike]) -> RegularityResult:
    """Fueter system at a point, cross-checked against the operator itself."""
    residuals = tuple(fueter_system(jacobian(f, point)))
    value = fueter_operator(f)(point)
    if tuple(value.coords) != residuals:
        raise ArithmeticError(f"Fueter operator {value} disagrees with the system residuals {residuals}")
    return RegularityResult(all(r == 0 for r in residuals), residuals, value)


def check_regular_everywhere(f: QuaternionPolynomial) -> RegularityResult:
    """Regularity as a polynomial identity: the residual polynomials vanish."""
    residuals = tuple(fueter_system(jacobian_polynomials(f)))
    op = fueter_operator(f)
    if op.coords != residuals:
        raise ArithmeticError("Fueter operator disagrees with the system residuals")
    return RegularityResult(all(r.is_zero() for r in residuals), residuals, op)


# --------------------------------------------------------------------------
# standard components of the derivative
# --------------------------------------------------------------------------

# Linear combinations of the standard components ∂^{kr} of the derivative
# whose vanishing is equivalent to the Fueter system.  Residual n of
# fueter_system equals FUETER_FACTORS[n] times combination n.
STANDARD_COMBINATIONS: tuple[dict[Entry, int], ...] = (
    {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1},
    {(0, 1): -1, (1, 0): 1, (2, 3): 1, (3, 2): -1},
    {(0, 2): -1, (1, 3): -1, (2, 0): 1, (3, 1): 1},
    {(0, 3): -1, (1, 2): 1, (2, 1): -1, (3, 0): 1},
)
FUETER_FACTORS = (-2, 2, 2, 2)


@lru_cache(maxsize=None)
def _standard_of_units() -> dict[Entry, SquareMatrix]:
    """Standard components (over H) of every matrix unit E_ij."""
    return {(i, j): matrix_to_standard(SquareMatrix.from_sparse(4, {(i, j): 1}), H)
            for i, j in product(range(4), repeat=2)}


def standard_polynomials(f: QuaternionPolynomial) -> tuple[tuple[CoordPolynomial, ...], ...]:
    """Standard components of the derivative as polynomials in x0..x3."""
    J = jacobian_polynomials(f)
    units = _standard_of_units()
    out = [[CoordPolynomial() for _ in range(4)] for _ in range(4)]
    for (i, j), std in units.items():
        if J[i][j].is_zero():
            continue
        for k, r in product(range(4), repeat=2):
            c = std.rows[k][r]
            if c:
                out[k][r] = out[k][r] + J[i][j] * c
    return tuple(tuple(row) for row in out)


def standard_combinations(std):
    """The four combinations of STANDARD_COMBINATIONS for a 4×4 component table."""
    std = std.rows if isinstance(std, SquareMatrix) else std
    out = []
    for combo in STANDARD_COMBINATIONS:
        total = 0
        for (k, r), c in combo.items():
            total = total + std[k][r] * c
        out.append(total)
    return tuple(out)


@dataclass(frozen=True)
class StandardRegularity:
    regular: bool
    combinations: tuple
    components: object  # SquareMatrix or table of CoordPolynomials


def regular_via_standard(f: QuaternionPolynomial, point: Sequence[RationalLike]) -> StandardRegularity:
    std = matrix_to_standard(jacobian(f, point), H)
    combos = standard_combinations(std)
    return StandardRegularity(all(c == 0 for c in combos), combos, std)


def regular_via_standard_everywhere(f: QuaternionPolynomial) -> StandardRegularity:
    std = standard_polynomials(f)
    combos = tuple(c if isinstance(c, CoordPolynomial) else CoordPolynomial.constant(c)
                   for c in standard_combinations(std))
    return StandardRegularity(all(c.is_zero() for c in combos), combos, std)


def _require_H(x: AlgElement) -> None:
    if x.algebra != H:
        raise UnsupportedOperation("the Gâteaux differential is defined here for H only")


def gateaux_differential(std: SquareMatrix, dx: AlgElement) -> AlgElement:
    """Σ f^{ij} e_i dx e_j."""
    _require_H(dx)
    if std.n != 4:
        raise ValueError(f"expected 4×4 standard components, got {std.n}×{std.n}")
    total = H.zero()
    for i, j in product(range(4), repeat=2):
        c = std.rows[i][j]
        if c:
            total = total + multiply(multiply(H.basis(i), dx), H.basis(j)).scale(c)
    return total


def gateaux_grouped(std: SquareMatrix, dx: AlgElement) -> AlgElement:
    """The differential with f^{00}, f^{01}, f^{02}, f^{03} eliminated.

    Each of those components is replaced by the value forced by the vanishing
    of its combination; the other twelve enter unchanged.  For components of
    a regular function this equals gateaux_differential.
    """
    _require_H(dx)
    f = std.rows
    eliminated = {
        (0, 0): -f[1][1] - f[2][2] - f[3][3],
        (0, 1): f[1][0] + f[2][3] - f[3][2],
        (0, 2): -f[1][3] + f[2][0] + f[3][1],
        (0, 3): f[1][2] - f[2][1] + f[3][0],
    }
    total = H.zero()
    for j in range(4):
        total = total + multiply(dx, H.basis(j)).scale(eliminated[(0, j)])
    for i, j in product(range(1, 4), range(4)):
        if f[i][j]:
            total = total + multiply(multiply(H.basis(i), dx), H.basis(j)).scale(f[i][j])
    return total


# --------------------------------------------------------------------------
# relaxed Cauchy-Riemann conditions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ConditionFailure:
    condition: str  # "diagonal" or "antisymmetric"
    entries: tuple[Entry, Entry]
    lhs: object
    rhs: object
    residual: object  # lhs - rhs


@dataclass(frozen=True)
class CRReport:
    diagonal: bool  # all ∂y^i/∂x^i equal
    antisymmetric: bool  # ∂y^i/∂x^j = -∂y^j/∂x^i for i ≠ j
    failures: tuple[ConditionFailure, ...]

    @property
    def holds(self) -> bool:
        return self.diagonal and self.antisymmetric


def _cr_report(J) -> CRReport:
    failures = []
    for i in range(1, 4):
        res = J[0][0] - J[i][i]
        if not _is_zero(res):
            failures.append(ConditionFailure("diagonal", ((0, 0), (i, i)), J[0][0], J[i][i], res))
    for i in range(4):
        for j in range(i + 1, 4):
            res = J[i][j] + J[j][i]
            if not _is_zero(res):
                failures.append(ConditionFailure("antisymmetric", ((i, j), (j, i)), J[i][j], -J[j][i], res))
    diagonal = not any(fl.condition == "diagonal" for fl in failures)
    antisym = not any(fl.condition == "antisymmetric" for fl in failures)
    return CRReport(diagonal, antisym, tuple(failures))


def cr_like_check(f: QuaternionPolynomial, point: Sequence[RationalLike]) -> CRReport:
    return _cr_report(jacobian(f, point).rows)


def cr_like_check_everywhere(f: QuaternionPolynomial) -> CRReport:
    return _cr_report(jacobian_polynomials(f))


def central_difference(f: Callable[[Sequence[Fraction]], AlgElement], point: Sequence[RationalLike],
                       var: int, h: RationalLike) -> tuple[Fraction, ...]:
    """(f(p + h e_var) - f(p - h e_var)) / 2h, exactly."""
    h = as_rational(h)
    p = [as_rational(v) for v in point]
    up = list(p)
    down = list(p)
    up[var] += h
    down[var] -= h
    diff = f(up) - f(down)
    return tuple(c / (2 * h) for c in diff.coords)
