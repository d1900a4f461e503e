"""Exact arithmetic for finite-dimensional algebras given by structural constants."""

from .rationals import Rational, RationalParseError, format_rational, parse_rational
from .linalg import SingularSystemError, SquareMatrix
from .algebra import (
    AlgebraError, AlgebraTable, AlgElement, QuaternionParams, UnsupportedOperation, ZeroDivisorError,
    algebra_from_json, algebra_to_json, builtin_complex, builtin_H, builtin_quaternion, builtin_real,
    conjugate, invert, left_mul_matrix, make_algebra, multiply, norm_sq, right_mul_matrix,
    rotate_vector, rotation_angle_check, structure_checks,
)
from .constructions import (
    IndexPairing, TowerSpec, lift_linear_map, reindex_coords, tensor_product, tower_compose,
)
from .linear_maps import (
    RelationSet, extract_relations, matrix_to_standard, sandwich_check, solve_commutant,
    standard_to_matrix,
)
from .polynomials import CoordPolynomial
from .regularity import (
    QuaternionPolynomial, build_polynomial, check_regular, cr_like_check, gateaux_differential,
    jacobian, regular_via_standard,
)

__version__ = "0.1.0"
