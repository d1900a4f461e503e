from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from algetower.polynomials import CoordPolynomial, coordinate_variables, poly_sum

X = sympy.symbols("x0:4")
exponents = st.tuples(*[st.integers(0, 3)] * 4)
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exponents, coefs, max_size=5).map(CoordPolynomial)
points = st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=5)] * 4)


def _sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([x ** e for x, e in zip(X, exp)])
                for exp, c in p.terms.items()), sympy.Integer(0))


def test_no_zero_coefficients_stored():
    p = CoordPolynomial({(1, 0, 0, 0): 1, (0, 1, 0, 0): 0})
    assert p.terms == {(1, 0, 0, 0): 1}
    x0, x1, _, _ = coordinate_variables()
    assert (x0 - x0).is_zero()
    assert (x0 * x1 - x1 * x0).terms == {}


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert sympy.expand(_sympy(p * q) - _sympy(p) * _sympy(q)) == 0
    assert sympy.expand(_sympy(p + q) - _sympy(p) - _sympy(q)) == 0


@given(polys, st.integers(0, 3))
def test_diff_matches_sympy(p, var):
    assert sympy.expand(_sympy(p.diff(var)) - sympy.diff(_sympy(p), X[var])) == 0


@given(polys, points)
def test_evaluation_matches_sympy(p, point):
    subs = {x: sympy.Rational(v.numerator, v.denominator) for x, v in zip(X, point)}
    value = _sympy(p).subs(subs)
    assert p(point) == Fraction(int(value.p), int(value.q))


def test_degree_and_text():
    x0, x1, x2, x3 = coordinate_variables()
    p = x0 * x0 - x1 * 3 + 2
    assert p.degree() == 2
    assert str(p) == "x0^2 - 3*x1 + 2"
    assert CoordPolynomial().degree() == -1
    assert poly_sum([x0, x1, -x0]) == x1
