from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algetower.rationals import RationalParseError, as_rational, format_rational, inverse, parse_rational

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


def test_basic_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2)
    assert (Fraction(2, 4).numerator, Fraction(2, 4).denominator) == (1, 2)


def test_inverse_sign_normalized():
    x = inverse(Fraction(-3, 7))
    assert x == Fraction(-7, 3)
    assert x.denominator > 0


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        inverse(Fraction(0))


def test_zero_is_unique():
    z = Fraction(0, 5)
    assert (z.numerator, z.denominator) == (0, 1)


@pytest.mark.parametrize("text,value", [
    ("-1", Fraction(-1)),
    ("3/6", Fraction(1, 2)),
    ("0", Fraction(0)),
    ("-12/8", Fraction(-3, 2)),
    ("−2", Fraction(-2)),
])
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text,pos", [
    ("2/0", 2),
    ("", 0),
    ("1/", 2),
    ("a", 0),
    ("1/2x", 3),
    ("--1", 1),
    ("1.5", 1),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(RationalParseError) as info:
        parse_rational(text)
    assert info.value.position == pos


def test_zero_denominator_message():
    with pytest.raises(RationalParseError, match="zero denominator"):
        parse_rational("2/0")


def test_as_rational_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("7/21") == Fraction(1, 3)


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_format():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def _check_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x + (-x) == 0
    if x:
        assert x * inverse(x) == 1
        assert inverse(x).denominator > 0


@settings(max_examples=500, deadline=None)
@given(rationals, rationals, rationals)
def test_field_axioms_hypothesis(x, y, z):
    _check_field_axioms(x, y, z)


def test_field_axioms_ten_thousand_triples(rng):
    def draw():
        return Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6))
    for _ in range(10_000):
        _check_field_axioms(draw(), draw(), draw())
