"""Closed-form verification checks, one per result in the reference tables.

Each check returns ``(passed, detail)``; :func:`run_suite` collects them
in a fixed order.  Randomized checks draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import reference as ref
from .algebra import (
    ZeroDivisorError, builtin_complex, builtin_H, builtin_quaternion, left_mul_matrix, multiply,
    norm_sq, right_mul_matrix, rotate_vector,
)
from .constructions import (
    IndexPairing, TowerSpec, fiber_unit_products, flatten_coords, lift_linear_map, apply_fiber_map,
    reindex_coords, tensor_product, tower_compose,
)
from .linalg import SingularSystemError, SquareMatrix
from .linear_maps import (
    acting_generators, commutation_rows, matrix_to_standard, sandwich_check, solve_commutant,
    standard_to_matrix,
)
from .polynomials import CoordPolynomial
from . import regularity as reg

DEFAULT_SEED = 20240607
QUATERNION_SAMPLES = ((-1, -1), (2, 3), (1, -1))


def default_seed() -> int:
    value = os.environ.get("ALGETOWER_SEED")
    if value is None or value == "":
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"ALGETOWER_SEED must be an integer, got {value!r}") from None


# --------------------------------------------------------------------------
# helpers shared with the tests
# --------------------------------------------------------------------------

def random_rational(rng: random.Random, span: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_matrix(rng: random.Random, n: int) -> SquareMatrix:
    return SquareMatrix.from_rows([[random_rational(rng) for _ in range(n)] for _ in range(n)])


def random_monomials(rng: random.Random, max_degree: int = 3, max_terms: int = 3) -> list:
    monomials = []
    for _ in range(rng.randint(1, max_terms)):
        mono = [tuple(random_rational(rng, 3, 2) for _ in range(4))]
        for _ in range(rng.randint(0, max_degree)):
            mono += ["x", tuple(random_rational(rng, 3, 2) for _ in range(4))]
        monomials.append(mono)
    return monomials


def chain_text(chain) -> str:
    """Render a chain of (sign, value, argument) the way RelationSet does."""
    items = sorted(chain, key=lambda t: (t[1], t[2]))
    lead = items[0][0]
    parts = []
    for n, (s, i, j) in enumerate(items):
        s *= lead
        name = f"f[{i}][{j}]"
        parts.append(name if s > 0 else f"-{name}")
    return " = ".join(parts)


def relation_lines_match(lines, chains) -> tuple[bool, str]:
    expected = sorted(chain_text(c) for c in chains)
    got = sorted(lines)
    if expected == got:
        return True, f"{len(got)} relations match"
    missing = sorted(set(expected) - set(got))
    extra = sorted(set(got) - set(expected))
    return False, f"missing {missing[:3]} extra {extra[:3]}"


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------

def check_complex_relations(rng):
    C = builtin_complex()
    if set(C.nonzero_constants) != {(k, i, j, Fraction(v)) for k, i, j, v in ref.COMPLEX_CONSTANTS}:
        return False, "complex constants differ"
    com = solve_commutant(C)
    if com.dimension != 2:
        return False, f"commutant dimension {com.dimension}"
    ok, detail = relation_lines_match(com.relations.lines(), ref.COMPLEX_CHAINS)
    if not ok:
        return ok, detail
    for (k, r) in product(range(2), repeat=2):
        M = standard_to_matrix(SquareMatrix.from_sparse(2, {(k, r): 1}), C)
        for entry, form in ref.COMPLEX_MATRIX_FROM_STANDARD.items():
            if M[entry] != form.get((k, r), 0):
                return False, f"component ({k},{r}) gives {M[entry]} at {entry}"
    return True, "dimension 2; both relations; component contraction matches"


def _in_commutant(M: SquareMatrix, generators) -> bool:
    return all((M @ G - G @ M).is_zero() for G in generators)


def check_complex_jacobian(rng):
    # Jacobian of z ↦ z² is left multiplication by 2z
    C = builtin_complex()
    gens = acting_generators(C)
    for _ in range(20):
        z = C.element([random_rational(rng), random_rational(rng)])
        if not _in_commutant(left_mul_matrix(z.scale(2)), gens):
            return False, f"Jacobian of z² at {z} breaks the relations"
    return True, "20 random points"


def check_complex_sandwich(rng):
    C = builtin_complex()
    for _ in range(20):
        z = C.element([random_rational(rng), random_rational(rng)])
        if not sandwich_check(left_mul_matrix(z), C).is_zero():
            return False, f"holomorphic map by {z} has nonzero contraction"
    conj = SquareMatrix.from_rows([[1, 0], [0, -1]])
    value = sandwich_check(conj, C)
    if value.coords != (2, 0):
        return False, f"conjugation gives {value}"
    return True, "zero for complex-linear maps, 2 for conjugation"


def check_quaternion_definition(rng):
    H = builtin_H()
    if set(H.nonzero_constants) != {(k, i, j, Fraction(v)) for k, i, j, v in ref.HAMILTON_CONSTANTS}:
        return False, "H constants differ"
    for a, b in QUATERNION_SAMPLES:
        A = builtin_quaternion(a, b)
        expected = {key: v for key, v in ref.quaternion_constants(a, b).items() if v}
        got = {(k, i, j): v for k, i, j, v in A.nonzero_constants}
        if got != expected:
            return False, f"E({a},{b}) constants differ"
        for _ in range(20):
            x = A.element(random_rational(rng) for _ in range(4))
            y = A.element(random_rational(rng) for _ in range(4))
            if norm_sq(multiply(x, y)) != norm_sq(x) * norm_sq(y):
                return False, f"norm not multiplicative in E({a},{b})"
    q = H.element([1, 1, 0, 0])
    if rotate_vector(q, (0, 1, 0)) != (0, 0, 1) or rotate_vector(q, (0, 0, 1)) != (0, -1, 0):
        return False, "rotation by 1+i is wrong"
    try:
        builtin_quaternion(0, 1)
        return False, "ab = 0 accepted"
    except ValueError:
        pass
    return True, "tables at three (a,b); multiplicative norm; rotation; ab≠0 enforced"


def check_scalar_tower(rng):
    C, H = builtin_complex(), builtin_H()
    for outer, inner in ((C, H), (C, C), (H, C)):
        if tower_compose(TowerSpec.scalar(outer, inner)) != tensor_product(outer, inner):
            return False, f"tower over {outer.name} differs from the tensor product"
    return True, "C⊗H, C⊗C, H⊗C"


def check_tower_coordinates(rng):
    C, H = builtin_complex(), builtin_H()
    pairing = IndexPairing(2, 4)
    for _ in range(20):
        flat = [random_rational(rng) for _ in range(8)]
        if list(flatten_coords(reindex_coords(flat, pairing), pairing)) != flat:
            return False, "flatten∘reindex is not the identity"
    spec = TowerSpec.scalar(C, H)
    via, direct = fiber_unit_products(spec)
    if via != direct:
        return False, "fibre-unit products disagree"
    return True, "round trip and fibre-unit products"


def _random_fiber_map(rng, outer_dim, inner_dim):
    return [[[random_rational(rng) for _ in range(outer_dim)] for _ in range(inner_dim)] for _ in range(inner_dim)]


def check_fibre_linear(rng):
    # lifted F2-linear maps of C⊗H commute with multiplication by C⊗1
    C = builtin_complex()
    CH = tensor_product(C, builtin_H())
    gens = acting_generators(CH, [0, 4])
    for _ in range(10):
        M = lift_linear_map(_random_fiber_map(rng, 2, 4), C)
        if not _in_commutant(M, gens):
            return False, "a lifted map breaks the relations"
    return True, "10 random lifted maps"


def check_right_multiplication(rng):
    C, H = builtin_complex(), builtin_H()
    algebras = [C, H, builtin_quaternion(2, 3), builtin_quaternion(1, -1), tensor_product(C, H)]
    for A in algebras:
        rows = commutation_rows(acting_generators(A))
        for i in range(A.dim):
            vec = right_mul_matrix(A.basis(i)).entries()
            if any(sum(c * vec[col] for col, c in row.items()) for row in rows):
                return False, f"right multiplication by e{i} fails in {A.name}"
    return True, f"{len(algebras)} algebras, every basis element"


def check_complex_linear(rng):
    com = solve_commutant(builtin_complex())
    return com.dimension == 2, f"dimension {com.dimension}"


def check_quaternion_linear(rng):
    com = solve_commutant(builtin_H())
    if com.dimension != 4:
        return False, f"dimension {com.dimension}"
    return relation_lines_match(com.relations.lines(), ref.HAMILTON_CHAINS)


def check_lifted_map(rng):
    C = builtin_complex()
    pairing = IndexPairing(2, 4)
    for _ in range(20):
        f12 = _random_fiber_map(rng, 2, 4)
        flat = [random_rational(rng) for _ in range(8)]
        lifted = lift_linear_map(f12, C).apply(flat)
        direct = apply_fiber_map(f12, reindex_coords(flat, pairing), C)
        if tuple(lifted) != tuple(flatten_coords(direct, pairing)):
            return False, "lifted matrix disagrees with the fibre action"
    if lift_linear_map([[[0, 1]]], C) != SquareMatrix.from_rows([[0, -1], [1, 0]]):
        return False, "multiplication by i does not lift to a rotation"
    return True, "20 random maps on C⊗H"


def check_complex_h_table(rng):
    CH = tensor_product(builtin_complex(), builtin_H())
    labels = ("1⊗1",) + ref.COMPLEX_H_LABELS
    checked = 0
    for r, row_label in enumerate(labels):
        for c, col_label in enumerate(labels):
            if r == 0:
                expected = col_label
            elif c == 0:
                expected = row_label
            else:
                expected = ref.COMPLEX_H_TABLE[r - 1][c - 1]
            sign, idx = ref.complex_h_index(expected)
            _, i = ref.complex_h_index(row_label)
            _, j = ref.complex_h_index(col_label)
            got = multiply(CH.basis(i), CH.basis(j))
            if got != CH.basis(idx).scale(sign):
                return False, f"{row_label}·{col_label} = {got}, expected {expected}"
            checked += 1
    return True, f"{checked} products"


def check_complex_h_constants(rng):
    C, H = builtin_complex(), builtin_H()
    CH = tensor_product(C, H)
    for d, b, j, i, m, k in product(range(2), range(4), range(2), range(4), range(2), range(4)):
        if CH.c(4 * d + b, 4 * j + i, 4 * m + k) != C.c(d, j, m) * H.c(b, i, k):
            return False, f"constant at {(d, b, j, i, m, k)}"
    return True, "all 512 constants are products of factor constants"


def check_complex_h_relations(rng):
    CH = tensor_product(builtin_complex(), builtin_H())
    com = solve_commutant(CH, acting_generators(CH, [0, 4]))
    if com.dimension != 32:
        return False, f"dimension {com.dimension}"
    return relation_lines_match(com.relations.lines(), ref.expand_complex_h_chains())


def _square_jacobian(A, x):
    return left_mul_matrix(x) + right_mul_matrix(x)


def check_complex_h_jacobian(rng):
    CH = tensor_product(builtin_complex(), builtin_H())
    gens = acting_generators(CH, [0, 4])
    for _ in range(10):
        x = CH.element(random_rational(rng) for _ in range(8))
        if not _in_commutant(_square_jacobian(CH, x), gens):
            return False, "Jacobian of squaring breaks the relations"
    return True, "Jacobian of x ↦ x² at 10 random points"


def _cch():
    C = builtin_complex()
    return tensor_product(C, tensor_product(C, builtin_H()))


def check_cch_constants(rng):
    C, H = builtin_complex(), builtin_H()
    B = _cch()
    for p, j, i, q, m, k in product(range(2), range(2), range(4), range(2), range(2), range(4)):
        for r, d, b in product(range(2), range(2), range(4)):
            expected = C.c(r, p, q) * C.c(d, j, m) * H.c(b, i, k)
            if B.c(8 * r + 4 * d + b, 8 * p + 4 * j + i, 8 * q + 4 * m + k) != expected:
                return False, f"constant mismatch at {(r, d, b, p, j, i, q, m, k)}"
    for n, (left, right, result, sign) in enumerate(ref.CCH_BLOCK_SIGNS):
        if n in ref.CCH_INCONSISTENT:
            continue
        for b, i, k in product(range(4), repeat=3):
            got = B.c(8 * result[0] + 4 * result[1] + b, 8 * left[0] + 4 * left[1] + i,
                      8 * right[0] + 4 * right[1] + k)
            if got != sign * H.c(b, i, k):
                return False, f"block entry {n} differs"
    return True, "product formula for all 4096 constants; listed block signs"


def check_cch_relations(rng):
    B = _cch()
    com = solve_commutant(B, acting_generators(B, [0, 4, 8]))
    if com.dimension != 64:
        return False, f"dimension {com.dimension}"
    return relation_lines_match(com.relations.lines(), ref.expand_cch_chains())


def check_cch_jacobian(rng):
    B = _cch()
    gens = acting_generators(B, [0, 4, 8])
    for _ in range(5):
        x = B.element(random_rational(rng) for _ in range(16))
        if not _in_commutant(_square_jacobian(B, x), gens):
            return False, "Jacobian of squaring breaks the relations"
    return True, "Jacobian of x ↦ x² at 5 random points"


def check_standard_to_matrix(rng):
    for a, b in QUATERNION_SAMPLES:
        A = builtin_quaternion(a, b)
        for k, r in product(range(4), repeat=2):
            M = standard_to_matrix(SquareMatrix.from_sparse(4, {(k, r): 1}), A)
            for (i, j), form in ref.MATRIX_FROM_STANDARD.items():
                expected = ref.coefficient(form[(k, r)], a, b) if (k, r) in form else 0
                if M[i, j] != expected:
                    return False, f"E({a},{b}) component ({k},{r}) entry ({i},{j}): {M[i, j]} vs {expected}"
    return True, "16 unit components at three (a,b)"


def check_standard_bijection(rng):
    extra = [(Fraction(-3, 2), Fraction(5, 7)), (7, -11)]
    for a, b in list(QUATERNION_SAMPLES) + extra:
        A = builtin_quaternion(a, b)
        for i, j in product(range(4), repeat=2):
            try:
                std = matrix_to_standard(SquareMatrix.from_sparse(4, {(i, j): 1}), A)
            except SingularSystemError as exc:
                return False, f"singular block at E({a},{b}): {exc}"
            for comp, form in ref.STANDARD_FROM_MATRIX.items():
                expected = ref.coefficient(form[(i, j)], a, b) if (i, j) in form else 0
                if std[comp] != expected:
                    return False, f"E({a},{b}) entry ({i},{j}) component {comp}"
        for _ in range(20):
            M = random_matrix(rng, 4)
            if standard_to_matrix(matrix_to_standard(M, A), A) != M:
                return False, f"round trip fails at E({a},{b})"
    return True, "inverse formulas and round trips at five (a,b)"


def _random_functions(rng, n):
    return [reg.build_polynomial(random_monomials(rng)) for _ in range(n)]


def _random_point(rng):
    return [random_rational(rng, 3, 3) for _ in range(4)]


def check_fueter_system(rng):
    for f in _random_functions(rng, 20):
        for _ in range(3):
            p = _random_point(rng)
            res = reg.check_regular(f, p)
            if tuple(res.operator.coords) != res.residuals:
                return False, "operator and system disagree"
            if sandwich_check(reg.jacobian(f, p), reg.H) != res.operator:
                return False, "row contraction disagrees with the operator"
    return True, "20 random functions × 3 points"


def check_fueter_standard(rng):
    for f in _random_functions(rng, 20):
        for _ in range(3):
            p = _random_point(rng)
            res = reg.check_regular(f, p)
            std = reg.regular_via_standard(f, p)
            if res.regular != std.regular:
                return False, "verdicts differ"
            if any(r != c * s for r, c, s in zip(res.residuals, reg.FUETER_FACTORS, std.combinations)):
                return False, f"residuals {res.residuals} vs combinations {std.combinations}"
    for name in ("fueter1", "fueter2", "fueter3"):
        if not reg.regular_via_standard_everywhere(reg.builtin_function(name)).regular:
            return False, f"{name} fails the component conditions"
    return True, "20 random functions × 3 points; Fueter variables"


def check_gateaux(rng):
    H = reg.H
    for name in ("fueter1", "fueter2", "fueter3"):
        f = reg.builtin_function(name)
        for _ in range(5):
            p = _random_point(rng)
            std = matrix_to_standard(reg.jacobian(f, p), H)
            dx = H.element(_random_point(rng))
            full = reg.gateaux_differential(std, dx)
            if full != reg.gateaux_grouped(std, dx):
                return False, "grouped form differs from the contraction"
            if tuple(full.coords) != reg.jacobian(f, p).apply(dx.coords):
                return False, "contraction differs from the Jacobian action"
    return True, "Fueter variables at 5 random points each"


def _cr_failure(report, condition):
    return [fl for fl in report.failures if fl.condition == condition]


def check_conjugation(rng):
    f = reg.builtin_function("conjugation")
    for _ in range(5):
        rep = reg.cr_like_check(f, _random_point(rng))
        fails = _cr_failure(rep, "diagonal")
        if rep.diagonal or not fails or (fails[0].lhs, fails[0].rhs) != (1, -1):
            return False, "conjugation passes the equal-diagonal condition"
    return True, "equal-diagonal condition fails: 1 vs -1"


def check_cube(rng):
    sq = reg.builtin_function("square")
    if not reg.cr_like_check_everywhere(sq).holds:
        return False, "x² fails the relaxed conditions"
    cube = reg.builtin_function("cube")
    rep = reg.cr_like_check(cube, (1, 0, 1, 0))
    fails = _cr_failure(rep, "diagonal")
    if rep.diagonal or (fails[0].lhs, fails[0].rhs) != (0, 2):
        return False, f"x³ at (1,0,1,0): {fails}"
    J = reg.jacobian_polynomials(cube)
    if J[0][0] != CoordPolynomial(ref.CUBE_D00) or J[1][1] != CoordPolynomial(ref.CUBE_D11):
        return False, "x³ partials differ"
    return True, "x² passes everywhere; x³ fails at (1,0,1,0): 0 vs 2"


@dataclass(frozen=True)
class SuiteRow:
    key: str
    title: str
    check: Callable


SUITE: tuple[SuiteRow, ...] = (
    SuiteRow("complex-relations", "complex-linear maps: constants, relations, component contraction", check_complex_relations),
    SuiteRow("complex-jacobian", "holomorphic Jacobians satisfy the complex relations", check_complex_jacobian),
    SuiteRow("complex-row-contraction", "row contraction vanishes exactly on holomorphic derivatives", check_complex_sandwich),
    SuiteRow("quaternion-algebra", "E(R,a,b) tables, norm, rotation", check_quaternion_definition),
    SuiteRow("scalar-tower", "tower with scalar constants is the tensor product", check_scalar_tower),
    SuiteRow("tower-coordinates", "coordinate reindexing in a tower", check_tower_coordinates),
    SuiteRow("fibre-linear", "lifted fibre-linear maps commute with the base field", check_fibre_linear),
    SuiteRow("right-multiplication", "right multiplications commute with left multiplications", check_right_multiplication),
    SuiteRow("complex-commutant", "complex-linear maps of C form a 2-dimensional space", check_complex_linear),
    SuiteRow("quaternion-commutant", "H-linear maps of H: dimension 4 and relations", check_quaternion_linear),
    SuiteRow("lifted-map", "lifted matrix represents the fibre map", check_lifted_map),
    SuiteRow("complex-h-table", "product table of C⊗H", check_complex_h_table),
    SuiteRow("complex-h-constants", "structural constants of C⊗H", check_complex_h_constants),
    SuiteRow("complex-h-commutant", "C-linear maps of C⊗H: dimension 32 and relations", check_complex_h_relations),
    SuiteRow("complex-h-jacobian", "C⊗H Jacobians satisfy the relations", check_complex_h_jacobian),
    SuiteRow("cch-constants", "structural constants of C⊗(C⊗H)", check_cch_constants),
    SuiteRow("cch-commutant", "C⊗C-linear maps of C⊗(C⊗H): dimension 64 and relations", check_cch_relations),
    SuiteRow("cch-jacobian", "C⊗(C⊗H) Jacobians satisfy the relations", check_cch_jacobian),
    SuiteRow("standard-to-matrix", "matrix of a map from its standard components", check_standard_to_matrix),
    SuiteRow("standard-bijection", "standard components from the matrix, bijectively", check_standard_bijection),
    SuiteRow("fueter-system", "Fueter operator equals its coordinate system", check_fueter_system),
    SuiteRow("fueter-components", "Fueter system in standard components", check_fueter_standard),
    SuiteRow("gateaux-differential", "differential of a regular function, grouped form", check_gateaux),
    SuiteRow("conjugation-relaxed-cr", "conjugation fails the relaxed conditions", check_conjugation),
    SuiteRow("cube-relaxed-cr", "x² passes and x³ fails the relaxed conditions", check_cube),
)


@dataclass(frozen=True)
class RowResult:
    key: str
    title: str
    passed: bool
    detail: str


def run_suite(seed: int | None = None, keys=None) -> list[RowResult]:
    if seed is None:
        seed = default_seed()
    results = []
    for n, row in enumerate(SUITE):
        if keys is not None and row.key not in keys:
            continue
        rng = random.Random(seed * 1000 + n)
        try:
            passed, detail = row.check(rng)
        except (ArithmeticError, ValueError, ZeroDivisorError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(RowResult(row.key, row.title, bool(passed), detail))
    return results
