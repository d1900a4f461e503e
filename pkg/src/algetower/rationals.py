"""Exact rational scalars.

Every scalar in the package is a :class:`fractions.Fraction`; it is already
canonical (positive denominator, reduced, zero is ``0/1``) and arbitrary
precision.  This module adds the text syntax used by the file formats and
the CLI: ``p`` or ``p/q`` with an optional leading minus.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]

_MINUS_SIGNS = ("-", "−")
_LITERAL = re.compile(r"(\d+)(?:/(\d+))?")


class RationalParseError(ValueError):
    """Malformed rational literal; ``position`` is the offending character index."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse {text!r} as a rational at position {position}: {reason}")


def parse_rational(text: str) -> Fraction:
    """Parse ``[-]digits(/digits)?`` into a canonical Fraction.

    >>> parse_rational("3/6")
    Fraction(1, 2)
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    pos = 0
    sign = 1
    if text[:1] in _MINUS_SIGNS:
        sign = -1
        pos = 1
    m = _LITERAL.match(text, pos)
    if m is None:
        reason = "empty literal" if pos >= len(text) else "expected a digit"
        raise RationalParseError(text, pos, reason)
    end = m.end()
    if end < len(text) and text[end] == "/":
        raise RationalParseError(text, end + 1, "expected a digit in the denominator")
    if end != len(text):
        raise RationalParseError(text, end, "unexpected trailing characters")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(sign * num)
    den = int(m.group(2))
    if den == 0:
        raise RationalParseError(text, m.start(2), "zero denominator")
    return Fraction(sign * num, den)


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``p`` for integers, ``p/q`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and rational literals; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def inverse(x: Fraction) -> Fraction:
    if x == 0:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    return 1 / Fraction(x)
