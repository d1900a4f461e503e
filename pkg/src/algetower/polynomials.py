"""Commutative polynomials in x0..x3 with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rationals import RationalLike, as_rational, format_rational

NVARS = 4
Exponent = tuple[int, ...]
_ZERO_EXP: Exponent = (0,) * NVARS


class CoordPolynomial:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, RationalLike] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != NVARS or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp!r}")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def constant(cls, c: RationalLike) -> "CoordPolynomial":
        return cls({_ZERO_EXP: c})

    @classmethod
    def variable(cls, index: int) -> "CoordPolynomial":
        exp = [0] * NVARS
        exp[index] = 1
        return cls({tuple(exp): 1})

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoordPolynomial.constant(other)
        if not isinstance(other, CoordPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return CoordPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return CoordPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CoordPolynomial(out)

    __rmul__ = __mul__

    def diff(self, var: int) -> "CoordPolynomial":
        out = {}
        for e, c in self._terms.items():
            if e[var]:
                lowered = list(e)
                lowered[var] -= 1
                out[tuple(lowered)] = c * e[var]
        return CoordPolynomial(out)

    def __call__(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != NVARS:
            raise ValueError(f"expected {NVARS} coordinates, got {len(point)}")
        p = [as_rational(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(p, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def __repr__(self):
        return f"CoordPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]])):
            mono = "*".join(f"x{v}" if k == 1 else f"x{v}^{k}" for v, k in enumerate(e) if k)
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value) -> CoordPolynomial:
    if isinstance(value, CoordPolynomial):
        return value
    return CoordPolynomial.constant(value)


def coordinate_variables() -> tuple[CoordPolynomial, ...]:
    return tuple(CoordPolynomial.variable(i) for i in range(NVARS))


def poly_sum(polys: Iterable[CoordPolynomial]) -> CoordPolynomial:
    total = CoordPolynomial()
    for p in polys:
        total = total + p
    return total
