from fractions import Fraction
from itertools import product

import pytest

from algetower.algebra import (
    builtin_complex, builtin_H, builtin_quaternion, multiply, right_mul_matrix,
)
from algetower.constructions import tensor_product
from algetower.linalg import SquareMatrix
from algetower.linear_maps import (
    acting_generators, extract_relations, is_algebra_of_maps, matrix_to_standard, sandwich_check,
    solve_commutant, standard_blocks, standard_to_matrix,
)
from algetower.regularity import fueter_system

C, H = builtin_complex(), builtin_H()
CH = tensor_product(C, H)
CCH = tensor_product(C, CH)
SAMPLES = [(-1, -1), (2, 3), (1, -1)]


def frac(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def rand_matrix(rng, n):
    return SquareMatrix.from_rows([[frac(rng) for _ in range(n)] for _ in range(n)])


def test_complex_commutant():
    com = solve_commutant(C)
    assert com.dimension == 2
    assert com.relations.lines() == ["f[0][0] = f[1][1]", "f[0][1] = -f[1][0]"]


def test_H_commutant():
    com = solve_commutant(H)
    assert com.dimension == 4
    assert com.relations.lines()[1] == "f[0][1] = -f[1][0] = -f[2][3] = f[3][2]"
    # the H-linear maps are the right multiplications
    for M in com.basis:
        a = H.element(M.rows[i][0] for i in range(4))
        assert M == right_mul_matrix(a)


def test_complex_h_commutant_has_dimension_32():
    com = solve_commutant(CH, acting_generators(CH, [0, 4]))
    assert com.dimension == 32
    assert "f[0][4] = -f[4][0]" in com.relations.lines()
    assert not com.relations.zeros() and not com.relations.general()


def test_commutant_is_deterministic():
    a = solve_commutant(CH, acting_generators(CH, [0, 4])).relations.lines()
    b = solve_commutant(CH, acting_generators(CH, [4, 0, 4])).relations.lines()
    assert a == b


def test_unconstrained_space():
    com = solve_commutant(H, [SquareMatrix.identity(4)])
    assert com.dimension == 16
    assert com.relations.lines() == []
    assert len(com.relations.free) == 16


def test_irreducible_action_leaves_only_scalars():
    N = SquareMatrix.from_rows([[0, 1], [0, 0]])
    com = solve_commutant(C, [N, N.transpose()])
    assert com.dimension == 1


def test_extract_relations_roundtrip(rng):
    for A, gens in ((H, None), (CH, [0, 4])):
        com = solve_commutant(A, acting_generators(A, gens) if gens else None)
        rebuilt = com.relations.to_basis()
        assert rebuilt == list(com.basis)


def test_extract_relations_errors():
    with pytest.raises(ValueError):
        extract_relations([])
    M = SquareMatrix.from_rows([[1, 2], [0, 0]])
    with pytest.raises(ValueError):
        extract_relations([M, M.scale(2)])


def test_general_relation_rendering():
    rel = extract_relations([SquareMatrix.from_rows([[1, 2], [0, 0]])])
    assert rel.lines() == ["f[1][0] = 0", "f[1][1] = 0", "f[0][1] = 2*f[0][0]"]


@pytest.mark.parametrize("A", [C, H, builtin_quaternion(2, 3), builtin_quaternion(1, -1), CH, CCH],
                         ids=lambda A: A.name)
def test_right_multiplication_commutes_with_left(A):
    gens = acting_generators(A)
    for i in range(A.dim):
        R = right_mul_matrix(A.basis(i))
        assert all((R @ G) == (G @ R) for G in gens)


def test_commutant_is_closed_under_products(rng):
    assert is_algebra_of_maps(solve_commutant(H).basis)
    basis = solve_commutant(CCH, acting_generators(CCH, [0, 4, 8])).basis
    pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(40)]
    assert is_algebra_of_maps(basis, pairs)
    N = SquareMatrix.from_rows([[0, 1], [0, 0]])
    assert is_algebra_of_maps([N])
    assert not is_algebra_of_maps([N, N.transpose()])


def _unit(n, k, r):
    return SquareMatrix.from_sparse(n, {(k, r): 1})


def test_standard_unit_component():
    for a, b in SAMPLES:
        A = builtin_quaternion(a, b)
        assert standard_to_matrix(_unit(4, 0, 0), A) == SquareMatrix.identity(4)
        M = standard_to_matrix(_unit(4, 1, 1), A)
        assert M == SquareMatrix.from_rows([[a, 0, 0, 0], [0, a, 0, 0], [0, 0, -a, 0], [0, 0, 0, -a]])
    # at a = -1 this is x ↦ i x i
    i = H.basis(1)
    M = standard_to_matrix(_unit(4, 1, 1), H)
    for n in range(4):
        assert M.apply(H.basis(n).coords) == multiply(multiply(i, H.basis(n)), i).coords


def test_standard_components_complex():
    std = SquareMatrix.from_rows([[1, 0], [0, 1]])
    assert standard_to_matrix(std, C).is_zero()


def test_standard_to_matrix_matches_products(rng):
    for a, b in SAMPLES:
        A = builtin_quaternion(a, b)
        std = rand_matrix(rng, 4)
        M = standard_to_matrix(std, A)
        x = A.element(frac(rng) for _ in range(4))
        total = A.zero()
        for k, r in product(range(4), repeat=2):
            total = total + multiply(multiply(A.basis(k), x), A.basis(r)).scale(std[k, r])
        assert M.apply(x.coords) == total.coords


def test_standard_to_matrix_is_linear(rng):
    for _ in range(10):
        s, t, c = rand_matrix(rng, 4), rand_matrix(rng, 4), frac(rng)
        assert standard_to_matrix(s.scale(c) + t, H) == standard_to_matrix(s, H).scale(c) + standard_to_matrix(t, H)


def test_matrix_to_standard_examples():
    for a, b in SAMPLES:
        std = matrix_to_standard(SquareMatrix.identity(4), builtin_quaternion(a, b))
        assert std == _unit(4, 0, 0)
    jac = SquareMatrix.from_sparse(4, {(0, 1): 1, (1, 0): -1})  # x¹ - i x⁰
    std = matrix_to_standard(jac, H)
    assert std[1, 0] == std[0, 1] == Fraction(-1, 2)
    assert std[2, 3] == std[3, 2] == 0
    assert all(std[n, n] == 0 for n in range(4))


def test_blocks_are_four_by_four():
    blocks = standard_blocks(builtin_quaternion(2, 3))
    assert len(blocks) == 4
    assert all(len(b.entries) == len(b.components) == 4 for b in blocks)


@pytest.mark.parametrize("ab", SAMPLES)
def test_round_trip(rng, ab):
    A = builtin_quaternion(*ab)
    for _ in range(100):
        M = rand_matrix(rng, 4)
        assert standard_to_matrix(matrix_to_standard(M, A), A) == M
        assert matrix_to_standard(standard_to_matrix(M, A), A) == M


def test_sandwich_examples():
    assert sandwich_check(SquareMatrix.identity(2), C).is_zero()
    assert sandwich_check(SquareMatrix.identity(4), H) == H.one().scale(-2)
    assert sandwich_check(SquareMatrix.from_rows([[1, 0], [0, -1]]), C) == C.one().scale(2)


def test_sandwich_matches_fueter_system(rng):
    mats = [_unit(4, i, j) for i, j in product(range(4), repeat=2)] + [rand_matrix(rng, 4) for _ in range(30)]
    for M in mats:
        assert sandwich_check(M, H).coords == fueter_system(M)
    # zero exactly on the span of the regular directions
    for M in mats:
        assert sandwich_check(M, H).is_zero() == all(r == 0 for r in fueter_system(M))
