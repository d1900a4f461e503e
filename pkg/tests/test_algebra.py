import json
import math
from fractions import Fraction

import pytest
import sympy
from sympy.algebras.quaternion import Quaternion

from algetower.algebra import (
    AlgebraError, UnsupportedOperation, ZeroDivisorError, algebra_from_json, algebra_to_json,
    builtin_complex, builtin_H, builtin_quaternion, builtin_real, center_dimension, conjugate,
    invert, left_mul_matrix, make_algebra, multiply, norm_sq, right_mul_matrix, rotate_vector,
    rotation_angle_check, structure_checks,
)
from algetower.constructions import tensor_product
from algetower.linalg import SquareMatrix

H = builtin_H()


def rand_q(rng, A=H, span=5):
    return A.element(Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(A.dim))


def _sym(x):
    return Quaternion(*[sympy.Rational(c.numerator, c.denominator) for c in x.coords])


def test_make_algebra_field_and_complex():
    R = make_algebra(1, [(0, 0, 0, 1)])
    assert R.unital and R.dim == 1
    C = make_algebra(2, [(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1), (0, 1, 1, -1)])
    assert C.unital and C == builtin_complex()


def test_make_algebra_errors():
    with pytest.raises(AlgebraError, match="out of range"):
        make_algebra(2, [(0, 2, 0, 1)])
    with pytest.raises(AlgebraError, match="duplicate"):
        make_algebra(2, [(0, 0, 0, 1), (0, 0, 0, 2)])


def test_non_unital_detected():
    A = make_algebra(2, [(0, 0, 0, 1)])
    assert not A.unital


def test_quaternion_parameters():
    A = builtin_quaternion(2, 3)
    assert A.c(0, 1, 1) == 2 and A.c(0, 2, 2) == 3 and A.c(0, 3, 3) == -6
    with pytest.raises(ValueError):
        builtin_quaternion(0, 1)
    assert builtin_quaternion(-1, -1) == H


def test_products_in_H():
    i, j, k = H.basis(1), H.basis(2), H.basis(3)
    assert multiply(i, j) == k
    assert multiply(j, i) == -k
    A = builtin_quaternion(5, 7)
    assert multiply(A.basis(1), A.basis(1)) == A.one().scale(5)


def test_multiply_matches_sympy_quaternions(rng):
    for _ in range(200):
        x, y = rand_q(rng), rand_q(rng)
        assert _sym(multiply(x, y)) == _sym(x) * _sym(y)


def test_unit_law(rng):
    for A in (builtin_complex(), H, builtin_quaternion(2, -3)):
        x = rand_q(rng, A)
        assert multiply(A.one(), x) == x == multiply(x, A.one())


def test_bilinearity(rng):
    for A in (builtin_complex(), builtin_quaternion(3, -2), tensor_product(builtin_complex(), H)):
        for _ in range(30):
            x, y, z = rand_q(rng, A), rand_q(rng, A), rand_q(rng, A)
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert multiply(x.scale(a) + y, z) == multiply(x, z).scale(a) + multiply(y, z)
            assert multiply(z, x.scale(a) + y) == multiply(z, x).scale(a) + multiply(z, y)


def test_conjugate():
    x = H.element([1, 1, 1, 1])
    assert conjugate(x) == H.element([1, -1, -1, -1])
    assert conjugate(H.element([3, 0, 0, 0])) == H.element([3, 0, 0, 0])
    with pytest.raises(UnsupportedOperation):
        conjugate(builtin_complex().one())


def test_conjugate_involution(rng):
    for _ in range(50):
        x = rand_q(rng)
        assert conjugate(conjugate(x)) == x


def test_norm_examples():
    A = builtin_quaternion(Fraction(2), Fraction(-5))
    assert norm_sq(A.basis(1)) == -2
    assert norm_sq(H.one()) == 1
    assert norm_sq(H.element([1, 1, 1, 1])) == 4


@pytest.mark.parametrize("ab", [(-1, -1), (2, 3), (1, -1), (Fraction(-1, 2), 7)])
def test_norm_is_product_with_conjugate(rng, ab):
    A = builtin_quaternion(*ab)
    for _ in range(50):
        x = rand_q(rng, A)
        xx = multiply(x, conjugate(x))
        assert xx.coords[1:] == (0, 0, 0)
        assert xx.coords[0] == norm_sq(x)


def test_norm_multiplicative(rng):
    for _ in range(200):
        x, y = rand_q(rng), rand_q(rng)
        assert norm_sq(multiply(x, y)) == norm_sq(x) * norm_sq(y)


def test_invert_examples():
    i = H.basis(1)
    assert invert(i) == -i
    x = H.element([1, 1, 1, 1])
    assert invert(x) == H.element([Fraction(1, 4), Fraction(-1, 4), Fraction(-1, 4), Fraction(-1, 4)])
    assert multiply(x, invert(x)) == H.one()
    split = builtin_quaternion(1, 1)
    with pytest.raises(ZeroDivisorError):
        invert(split.element([1, 1, 0, 0]))


def test_invert_both_sides(rng):
    for ab in ((-1, -1), (2, 3)):
        A = builtin_quaternion(*ab)
        for _ in range(50):
            x = rand_q(rng, A)
            if norm_sq(x) == 0:
                continue
            assert multiply(x, invert(x)) == A.one() == multiply(invert(x), x)


def test_rotation_examples():
    q = H.element([1, 1, 0, 0])
    assert rotate_vector(q, (0, 1, 0)) == (0, 0, 1)
    assert rotate_vector(q, (1, 0, 0)) == (1, 0, 0)
    assert rotate_vector(H.one(), (3, -2, 5)) == (3, -2, 5)


def test_rotation_matches_sympy(rng):
    for _ in range(50):
        q = rand_q(rng)
        if norm_sq(q) == 0:
            continue
        v = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
        image = _sym(q) * Quaternion(0, *[sympy.Rational(t.numerator, t.denominator) for t in v]) * _sym(q).inverse()
        got = rotate_vector(q, v)
        assert [sympy.Rational(g.numerator, g.denominator) for g in got] == [image.b, image.c, image.d]


def test_rotation_angle_examples():
    s = math.sqrt(2) / 2
    assert rotation_angle_check((s, s, 0, 0)) == pytest.approx(math.pi / 2, abs=1e-9)
    assert rotation_angle_check((1, 0, 0, 0)) == 0
    assert rotation_angle_check((0, 1, 0, 0)) == pytest.approx(math.pi, abs=1e-9)
    with pytest.raises(ValueError):
        rotation_angle_check((1, 1, 0, 0))


def test_left_mul_complex():
    C = builtin_complex()
    a = C.element([3, 5])
    assert left_mul_matrix(a) == SquareMatrix.from_rows([[3, -5], [5, 3]])


def test_left_mul_H_pattern():
    a = H.element([1, 2, 3, 4])
    assert left_mul_matrix(a) == SquareMatrix.from_rows([
        [1, -2, -3, -4], [2, 1, -4, 3], [3, 4, 1, -2], [4, -3, 2, 1]])
    assert right_mul_matrix(H.one()) == SquareMatrix.identity(4)


def test_mul_matrices_act_like_products(rng):
    for A in (H, builtin_quaternion(2, 3), tensor_product(builtin_complex(), H)):
        for _ in range(30):
            a, x = rand_q(rng, A), rand_q(rng, A)
            assert left_mul_matrix(a).apply(x.coords) == multiply(a, x).coords
            assert right_mul_matrix(a).apply(x.coords) == multiply(x, a).coords


def test_structure_checks():
    assert structure_checks(H).as_dict() == {"unital": True, "commutative": False, "associative": True}
    assert structure_checks(builtin_complex()).as_dict() == {"unital": True, "commutative": True, "associative": True}
    CH = tensor_product(builtin_complex(), H)
    s = structure_checks(CH)
    assert s.associative and not s.commutative
    # e0·e0 = e1, e1·e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
    bad = make_algebra(2, [(1, 0, 0, 1), (0, 1, 0, 1)])
    assert not structure_checks(bad).associative


def test_center_dimensions():
    assert center_dimension(H) == 1
    assert center_dimension(builtin_complex()) == 2
    assert center_dimension(builtin_real()) == 1


def test_json_roundtrip():
    for A in (builtin_complex(), H, builtin_quaternion(2, 3)):
        data = json.loads(json.dumps(algebra_to_json(A)))
        B = algebra_from_json(data)
        assert B == A
        assert B.quaternion == A.quaternion


def test_json_errors():
    with pytest.raises(AlgebraError):
        algebra_from_json({"dim": 2})
    with pytest.raises(AlgebraError):
        algebra_from_json({"dim": 2, "constants": [[0, 0, 0, 0.5]]})
    with pytest.raises(AlgebraError):
        algebra_from_json([1, 2])
