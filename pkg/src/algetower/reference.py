"""Closed-form reference tables the verification suite compares against.

Matrix entries are written ``(value index, argument index)``, i.e. the
entry f^i_j is ``(i, j)``.  Coefficients that depend on the quaternion
parameters are short strings in a, b: "1", "-ab", "1/4", "-1/4ab" (the
letters after a fraction divide it).  :func:`coefficient` evaluates them.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .rationals import RationalLike, as_rational

_COEF = re.compile(r"^(-?)(\d+(?:/\d+)?)?([ab]*)$")


def coefficient(text: str, a: RationalLike, b: RationalLike) -> Fraction:
    m = _COEF.match(text)
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"bad coefficient {text!r}")
    sign, number, letters = m.groups()
    value = Fraction(number) if number else Fraction(1)
    factor = Fraction(1)
    for ch in letters:
        factor *= as_rational(a) if ch == "a" else as_rational(b)
    value = value / factor if number and "/" in number else value * factor
    return -value if sign else value


# structural constants as (k, i, j, value): e_i e_j has e_k-coefficient value
COMPLEX_CONSTANTS = ((0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1), (0, 1, 1, -1))

HAMILTON_CONSTANTS = (
    (0, 0, 0, 1), (1, 0, 1, 1), (2, 0, 2, 1), (3, 0, 3, 1),
    (1, 1, 0, 1), (0, 1, 1, -1), (3, 1, 2, 1), (2, 1, 3, -1),
    (2, 2, 0, 1), (3, 2, 1, -1), (0, 2, 2, -1), (1, 2, 3, 1),
    (3, 3, 0, 1), (2, 3, 1, 1), (1, 3, 2, -1), (0, 3, 3, -1),
)

QUATERNION_CONSTANTS = (
    (0, 0, 0, "1"), (1, 0, 1, "1"), (2, 0, 2, "1"), (3, 0, 3, "1"),
    (1, 1, 0, "1"), (0, 1, 1, "a"), (3, 1, 2, "1"), (2, 1, 3, "a"),
    (2, 2, 0, "1"), (3, 2, 1, "-1"), (0, 2, 2, "b"), (1, 2, 3, "-b"),
    (3, 3, 0, "1"), (2, 3, 1, "-a"), (1, 3, 2, "b"), (0, 3, 3, "-ab"),
)


def quaternion_constants(a: RationalLike, b: RationalLike) -> dict[tuple[int, int, int], Fraction]:
    return {(k, i, j): coefficient(c, a, b) for k, i, j, c in QUATERNION_CONSTANTS}


# Product table of C⊗H without the unit row and column.  Labels are
# "u⊗v" with u in {1, i} and v in {1, i, j, k}; a leading "-" negates.
COMPLEX_H_LABELS = ("1⊗i", "1⊗j", "1⊗k", "i⊗1", "i⊗i", "i⊗j", "i⊗k")
COMPLEX_H_TABLE = (
    ("-1⊗1", "1⊗k", "-1⊗j", "i⊗i", "-i⊗1", "i⊗k", "-i⊗j"),
    ("-1⊗k", "-1⊗1", "1⊗i", "i⊗j", "-i⊗k", "-i⊗1", "i⊗i"),
    ("1⊗j", "-1⊗i", "-1⊗1", "i⊗k", "i⊗j", "-i⊗i", "-i⊗1"),
    ("i⊗i", "i⊗j", "i⊗k", "-1⊗1", "-1⊗i", "-1⊗j", "-1⊗k"),
    ("-i⊗1", "i⊗k", "-i⊗j", "-1⊗i", "1⊗1", "-1⊗k", "1⊗j"),
    ("-i⊗k", "-i⊗1", "i⊗i", "-1⊗j", "1⊗k", "1⊗1", "-1⊗i"),
    ("i⊗j", "-i⊗i", "-i⊗1", "-1⊗k", "-1⊗j", "1⊗i", "1⊗1"),
)


def complex_h_index(label: str) -> tuple[int, int]:
    """(sign, flat index) of a C⊗H table label, flat index = 4·(C index) + (H index)."""
    sign = -1 if label.startswith("-") else 1
    left, right = label.lstrip("-").split("⊗")
    return sign, 4 * "1i".index(left) + "1ijk".index(right)


# Constants of C⊗(C⊗H) between blocks: ((p, j), (q, m), (r, d), sign) says
# B^{r d b}_{p j i, q m k} = sign · C^b_{ik} (H constants), where p, q, r
# index the outer C and j, m, d the middle C.  Listed entry by entry in the
# reference order; ``CCH_INCONSISTENT`` marks the positions whose listed
# indices disagree with the product of the complex factors.
CCH_BLOCK_SIGNS = (
    ((0, 0), (0, 0), (0, 0), 1), ((0, 1), (0, 1), (0, 1), 1),
    ((0, 1), (0, 0), (0, 1), 1), ((0, 1), (0, 1), (0, 1), -1),
    ((0, 0), (1, 0), (1, 0), 1), ((0, 0), (1, 1), (1, 1), 1),
    ((0, 1), (1, 0), (1, 1), 1), ((0, 1), (1, 1), (1, 1), -1),
    ((1, 0), (0, 0), (1, 0), 1), ((1, 0), (0, 1), (1, 1), 1),
    ((1, 1), (0, 0), (1, 1), 1), ((1, 1), (0, 1), (1, 1), -1),
    ((1, 0), (1, 0), (0, 0), -1), ((1, 0), (1, 1), (0, 1), -1),
    ((1, 1), (1, 0), (0, 1), -1), ((1, 1), (1, 1), (0, 1), 1),
)
CCH_INCONSISTENT = frozenset({1, 3, 7, 11, 15})


# Relation chains: each chain lists (sign, value index, argument index);
# all signed entries in a chain are equal.
COMPLEX_CHAINS = (
    ((1, 0, 0), (1, 1, 1)),
    ((1, 1, 0), (-1, 0, 1)),
)

HAMILTON_CHAINS = (
    ((1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)),
    ((1, 0, 1), (-1, 1, 0), (-1, 2, 3), (1, 3, 2)),
    ((1, 0, 2), (1, 1, 3), (-1, 2, 0), (-1, 3, 1)),
    ((1, 0, 3), (-1, 1, 2), (1, 2, 1), (-1, 3, 0)),
)

# Chain templates over the complex block indices: entries are
# (sign, value block, argument block); instantiated for every pair of
# H indices (j, i) as value = block·4 + j, argument = block·4 + i (C⊗H)
# or value = 8p + 4m + j with block (p, m) (C⊗(C⊗H)).
COMPLEX_H_CHAIN_TEMPLATES = (
    ((1, 0, 0), (1, 1, 1)),
    ((1, 1, 0), (-1, 0, 1)),
)

CCH_CHAIN_TEMPLATES = (
    ((1, (0, 0), (0, 0)), (1, (1, 0), (1, 0)), (1, (0, 1), (0, 1)), (1, (1, 1), (1, 1))),
    ((1, (0, 1), (0, 0)), (1, (1, 1), (1, 0)), (-1, (0, 0), (0, 1)), (-1, (1, 0), (1, 1))),
    ((1, (1, 0), (0, 0)), (-1, (0, 0), (1, 0)), (1, (1, 1), (0, 1)), (-1, (0, 1), (1, 1))),
    ((1, (1, 1), (0, 0)), (-1, (0, 1), (1, 0)), (-1, (1, 0), (0, 1)), (1, (0, 0), (1, 1))),
)


def expand_complex_h_chains() -> list[tuple[tuple[int, int, int], ...]]:
    out = []
    for template in COMPLEX_H_CHAIN_TEMPLATES:
        for j in range(4):
            for i in range(4):
                out.append(tuple((s, 4 * v + j, 4 * w + i) for s, v, w in template))
    return out


def expand_cch_chains() -> list[tuple[tuple[int, int, int], ...]]:
    out = []
    for template in CCH_CHAIN_TEMPLATES:
        for j in range(4):
            for i in range(4):
                out.append(tuple((s, 8 * v[0] + 4 * v[1] + j, 8 * w[0] + 4 * w[1] + i)
                                 for s, v, w in template))
    return out


# Matrix entries of x ↦ Σ f^{kr} e_k x e_r over the complex field, as
# {entry: {component: coefficient}}.
COMPLEX_MATRIX_FROM_STANDARD = {
    (0, 0): {(0, 0): 1, (1, 1): -1},
    (1, 0): {(0, 1): 1, (1, 0): 1},
    (0, 1): {(0, 1): -1, (1, 0): -1},
    (1, 1): {(0, 0): 1, (1, 1): -1},
}

# The same over E(R, a, b), coefficients in a, b.
MATRIX_FROM_STANDARD = {
    (0, 0): {(0, 0): "1", (1, 1): "a", (2, 2): "b", (3, 3): "-ab"},
    (1, 1): {(0, 0): "1", (1, 1): "a", (2, 2): "-b", (3, 3): "ab"},
    (2, 2): {(0, 0): "1", (1, 1): "-a", (2, 2): "b", (3, 3): "ab"},
    (3, 3): {(0, 0): "1", (1, 1): "-a", (2, 2): "-b", (3, 3): "-ab"},
    (1, 0): {(0, 1): "1", (1, 0): "1", (2, 3): "-b", (3, 2): "b"},
    (0, 1): {(0, 1): "a", (1, 0): "a", (2, 3): "ab", (3, 2): "-ab"},
    (3, 2): {(0, 1): "-1", (1, 0): "1", (2, 3): "b", (3, 2): "b"},
    (2, 3): {(0, 1): "-a", (1, 0): "a", (2, 3): "-ab", (3, 2): "-ab"},
    (2, 0): {(0, 2): "1", (1, 3): "a", (2, 0): "1", (3, 1): "-a"},
    (3, 1): {(0, 2): "1", (1, 3): "a", (2, 0): "-1", (3, 1): "a"},
    (0, 2): {(0, 2): "b", (1, 3): "-ab", (2, 0): "b", (3, 1): "ab"},
    (1, 3): {(0, 2): "b", (1, 3): "-ab", (2, 0): "-b", (3, 1): "-ab"},
    (3, 0): {(0, 3): "1", (1, 2): "1", (2, 1): "-1", (3, 0): "1"},
    (2, 1): {(0, 3): "a", (1, 2): "a", (2, 1): "a", (3, 0): "-a"},
    (1, 2): {(0, 3): "-b", (1, 2): "b", (2, 1): "b", (3, 0): "b"},
    (0, 3): {(0, 3): "-ab", (1, 2): "ab", (2, 1): "-ab", (3, 0): "-ab"},
}

# Inverse direction: {component: {entry: coefficient}}.
STANDARD_FROM_MATRIX = {
    (0, 0): {(0, 0): "1/4", (1, 1): "1/4", (2, 2): "1/4", (3, 3): "1/4"},
    (1, 1): {(0, 0): "1/4a", (1, 1): "1/4a", (2, 2): "-1/4a", (3, 3): "-1/4a"},
    (2, 2): {(0, 0): "1/4b", (1, 1): "-1/4b", (2, 2): "1/4b", (3, 3): "-1/4b"},
    (3, 3): {(0, 0): "-1/4ab", (1, 1): "1/4ab", (2, 2): "1/4ab", (3, 3): "-1/4ab"},
    (1, 0): {(0, 1): "1/4a", (1, 0): "1/4", (2, 3): "1/4a", (3, 2): "1/4"},
    (0, 1): {(0, 1): "1/4a", (1, 0): "1/4", (2, 3): "-1/4a", (3, 2): "-1/4"},
    (3, 2): {(0, 1): "-1/4ab", (1, 0): "1/4b", (2, 3): "-1/4ab", (3, 2): "1/4b"},
    (2, 3): {(0, 1): "1/4ab", (1, 0): "-1/4b", (2, 3): "-1/4ab", (3, 2): "1/4b"},
    (2, 0): {(0, 2): "1/4b", (1, 3): "-1/4b", (2, 0): "1/4", (3, 1): "-1/4"},
    (3, 1): {(0, 2): "1/4ab", (1, 3): "-1/4ab", (2, 0): "-1/4a", (3, 1): "1/4a"},
    (0, 2): {(0, 2): "1/4b", (1, 3): "1/4b", (2, 0): "1/4", (3, 1): "1/4"},
    (1, 3): {(0, 2): "-1/4ab", (1, 3): "-1/4ab", (2, 0): "1/4a", (3, 1): "1/4a"},
    (3, 0): {(0, 3): "-1/4ab", (1, 2): "1/4b", (2, 1): "-1/4a", (3, 0): "1/4"},
    (2, 1): {(0, 3): "-1/4ab", (1, 2): "1/4b", (2, 1): "1/4a", (3, 0): "-1/4"},
    (1, 2): {(0, 3): "1/4ab", (1, 2): "1/4b", (2, 1): "1/4a", (3, 0): "1/4"},
    (0, 3): {(0, 3): "-1/4ab", (1, 2): "-1/4b", (2, 1): "1/4a", (3, 0): "1/4"},
}

# Polynomial data for x ↦ x² and x ↦ x³ as {exponent tuple: coefficient}.
SQUARE_COORDS = (
    {(2, 0, 0, 0): 1, (0, 2, 0, 0): -1, (0, 0, 2, 0): -1, (0, 0, 0, 2): -1},
    {(1, 1, 0, 0): 2},
    {(1, 0, 1, 0): 2},
    {(1, 0, 0, 1): 2},
)

# Jacobian of x ↦ x²: entry -> (coefficient, variable) meaning coefficient·x^variable
SQUARE_JACOBIAN = (
    ((2, 0), (-2, 1), (-2, 2), (-2, 3)),
    ((2, 1), (2, 0), None, None),
    ((2, 2), None, (2, 0), None),
    ((2, 3), None, None, (2, 0)),
)

CUBE_COORD0 = {(3, 0, 0, 0): 1, (1, 2, 0, 0): -3, (1, 0, 2, 0): -3, (1, 0, 0, 2): -3}
CUBE_COORD1 = {(0, 3, 0, 0): -1, (2, 1, 0, 0): 3, (0, 1, 2, 0): -1, (0, 1, 0, 2): -1}
CUBE_D00 = {(2, 0, 0, 0): 3, (0, 2, 0, 0): -3, (0, 0, 2, 0): -3, (0, 0, 0, 2): -3}
CUBE_D11 = {(2, 0, 0, 0): 3, (0, 2, 0, 0): -3, (0, 0, 2, 0): -1, (0, 0, 0, 2): -1}
