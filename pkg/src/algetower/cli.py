"""Command-line front end.

Every subcommand builds a JSON-compatible report; ``--format table`` renders
the same report as text.  Bad input produces an ``{"error": ...}`` report
and exit status 2; failed checks give exit status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import regularity as reg
from .algebra import (
    AlgebraTable, algebra_from_json, algebra_to_json, builtin_complex, builtin_H, builtin_quaternion,
    builtin_real, center_dimension, conjugate, invert, multiply, norm_sq, rotate_vector, structure_checks,
)
from .constructions import TowerSpec, tensor_order_comparison, tensor_product, tower_compose
from .linalg import SquareMatrix
from .linear_maps import acting_generators, matrix_to_standard, sandwich_check, solve_commutant, standard_to_matrix
from .rationals import format_rational, parse_rational
from .suite import SUITE, default_seed, run_suite

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported as a structured error."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# --------------------------------------------------------------------------
# input helpers
# --------------------------------------------------------------------------

NAMED_ALGEBRAS = ("R", "C", "H", "quaternion", "CH", "CCH")


def _load_json(text: str):
    """Inline JSON, or the contents of a file if ``text`` names one."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def resolve_algebra(spec: str, a: str | None = None, b: str | None = None) -> AlgebraTable:
    if spec == "R":
        return builtin_real()
    if spec == "C":
        return builtin_complex()
    if spec == "H":
        return builtin_H()
    if spec == "quaternion":
        return builtin_quaternion(parse_rational(a or "-1"), parse_rational(b or "-1"))
    if spec == "CH":
        return tensor_product(builtin_complex(), builtin_H())
    if spec == "CCH":
        C = builtin_complex()
        return tensor_product(C, tensor_product(C, builtin_H()))
    if os.path.isfile(spec) or spec.lstrip().startswith("{"):
        return algebra_from_json(_load_json(spec))
    raise InputError(f"unknown algebra {spec!r}: use one of {', '.join(NAMED_ALGEBRAS)} or a JSON file")


def parse_vector(text: str, n: int | None = None) -> list[Fraction]:
    text = text.strip()
    if text.startswith("["):
        data = _load_json(text)
        if not isinstance(data, list):
            raise InputError("vector must be a JSON list")
        items = [str(v) for v in data]
    else:
        items = [t for t in text.split(",")]
    values = [parse_rational(t.strip()) for t in items]
    if n is not None and len(values) != n:
        raise InputError(f"expected {n} coordinates, got {len(values)}")
    return values


def parse_matrix(text: str) -> SquareMatrix:
    data = _load_json(text)
    if isinstance(data, dict) and "matrix" in data:
        data = data["matrix"]
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise InputError("matrix must be a JSON list of rows")
    rows = [[parse_rational(str(v)) for v in row] for row in data]
    try:
        return SquareMatrix.from_rows(rows)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _vec(values) -> list[str]:
    return [format_rational(v) for v in values]


def _mat(M: SquareMatrix) -> list[list[str]]:
    return M.to_text()


# --------------------------------------------------------------------------
# subcommands; each returns (report, passed)
# --------------------------------------------------------------------------

def cmd_algebra(args):
    A = resolve_algebra(args.algebra, args.a, args.b)
    report = algebra_to_json(A)
    report["name"] = A.name
    report["structure"] = structure_checks(A).as_dict()
    report["center_dim"] = center_dimension(A)
    return report, True


def cmd_mul(args):
    A = resolve_algebra(args.algebra, args.a, args.b)
    x = A.element(parse_vector(args.x, A.dim))
    y = A.element(parse_vector(args.y, A.dim))
    return {"algebra": A.name, "product": _vec(multiply(x, y).coords), "text": str(multiply(x, y))}, True


def cmd_norm(args):
    A = resolve_algebra(args.algebra, args.a, args.b)
    x = A.element(parse_vector(args.x, A.dim))
    return {"algebra": A.name, "norm_sq": format_rational(norm_sq(x)),
            "conjugate": _vec(conjugate(x).coords)}, True


def cmd_invert(args):
    A = resolve_algebra(args.algebra, args.a, args.b)
    x = A.element(parse_vector(args.x, A.dim))
    inv = invert(x)
    ok = multiply(x, inv) == A.one() and multiply(inv, x) == A.one()
    return {"algebra": A.name, "inverse": _vec(inv.coords), "text": str(inv), "verified": ok}, ok


def cmd_rotate(args):
    H = builtin_H()
    q = H.element(parse_vector(args.q, 4))
    v = parse_vector(args.v, 3)
    w = rotate_vector(q, v)
    preserved = sum(t * t for t in w) == sum(t * t for t in v)
    return {"q": _vec(q.coords), "v": _vec(v), "rotated": _vec(w), "length_preserved": preserved}, preserved


def cmd_tensor(args):
    outer = resolve_algebra(args.outer, args.a, args.b)
    inner = resolve_algebra(args.inner, args.a, args.b)
    A = tensor_product(outer, inner)
    report = algebra_to_json(A)
    report["name"] = A.name
    report["structure"] = structure_checks(A).as_dict()
    return report, True


def _tower_spec(data) -> TowerSpec:
    if not isinstance(data, dict):
        raise InputError("tower definition must be a JSON object")
    for key in ("outer", "inner_dim", "constants"):
        if key not in data:
            raise InputError(f"tower definition is missing {key!r}")
    outer = data["outer"]
    outer = resolve_algebra(outer) if isinstance(outer, str) else algebra_from_json(outer)
    consts = {}
    for entry in data["constants"]:
        if not isinstance(entry, list) or len(entry) != 4 or not isinstance(entry[3], list):
            raise InputError(f"tower constant must be [b, i, k, [outer coordinates]], got {entry!r}")
        b, i, k, coords = entry
        consts[(b, i, k)] = [parse_rational(str(c)) for c in coords]
    return TowerSpec.from_field_valued(outer, data["inner_dim"], consts, data.get("labels"))


def cmd_tower(args):
    spec = _tower_spec(_load_json(args.spec))
    A = tower_compose(spec)
    report = algebra_to_json(A)
    report["structure"] = structure_checks(A).as_dict()
    return report, True


def cmd_commutant(args):
    A = resolve_algebra(args.algebra, args.a, args.b)
    indices = None
    if args.generators:
        try:
            indices = [int(t) for t in args.generators.split(",")]
        except ValueError:
            raise InputError("--generators takes comma-separated basis indices") from None
        bad = [i for i in indices if not 0 <= i < A.dim]
        if bad:
            raise InputError(f"generator indices {bad} out of range for dimension {A.dim}")
    com = solve_commutant(A, acting_generators(A, indices))
    report = {
        "algebra": A.name,
        "dimension": com.dimension,
        "relations": com.relations.lines(),
        "free": [f"f[{i}][{j}]" for i, j in com.relations.free],
    }
    if not args.no_basis:
        report["basis"] = [_mat(M) for M in com.basis]
    return report, True


def cmd_convert(args):
    A = builtin_quaternion(parse_rational(args.a or "-1"), parse_rational(args.b or "-1"))
    M = parse_matrix(args.table)
    if M.n != 4:
        raise InputError(f"expected a 4×4 table, got {M.n}×{M.n}")
    if args.to == "standard":
        out = matrix_to_standard(M, A)
        back = standard_to_matrix(out, A)
    else:
        out = standard_to_matrix(M, A)
        back = matrix_to_standard(out, A)
    ok = back == M
    return {"algebra": A.name, "to": args.to, "result": _mat(out), "round_trip": ok}, ok


def _function_from_args(args) -> reg.QuaternionPolynomial:
    if args.fn and args.fn_json:
        raise InputError("give either --fn or --fn-json, not both")
    if args.fn:
        return reg.builtin_function(args.fn)
    if args.fn_json:
        return reg.build_polynomial(reg.parse_function(_load_json(args.fn_json)))
    raise InputError("regular-check needs --fn NAME or --fn-json MONOMIALS")


def _cr_json(report: reg.CRReport):
    def cond(name):
        fails = [fl for fl in report.failures if fl.condition == name]
        return {
            "holds": not fails,
            "failures": [{"entries": [list(e) for e in fl.entries], "lhs": str(_text(fl.lhs)),
                          "rhs": str(_text(fl.rhs)), "residual": str(_text(fl.residual))} for fl in fails],
        }
    return cond("diagonal"), cond("antisymmetric")


def _text(v):
    return format_rational(v) if isinstance(v, Fraction) else str(v)


def cmd_regular_check(args):
    f = _function_from_args(args)
    report = {"function": f.to_text()}
    if args.everywhere:
        fueter = reg.check_regular_everywhere(f)
        comps = reg.regular_via_standard_everywhere(f)
        cr = reg.cr_like_check_everywhere(f)
        report["mode"] = "everywhere"
    else:
        if not args.point:
            raise InputError("regular-check needs --point w,x,y,z or --everywhere")
        p = parse_vector(args.point, 4)
        fueter = reg.check_regular(f, p)
        comps = reg.regular_via_standard(f, p)
        cr = reg.cr_like_check(f, p)
        report["mode"] = "point"
        report["point"] = _vec(p)
        report["row_contraction"] = _vec(sandwich_check(reg.jacobian(f, p), reg.H).coords)
    diagonal, antisym = _cr_json(cr)
    agree = fueter.regular == comps.regular
    report["fueter_system"] = {"holds": fueter.regular, "residuals": [_text(r) for r in fueter.residuals]}
    report["standard_components"] = {"holds": comps.regular, "combinations": [_text(c) for c in comps.combinations]}
    report["equal_diagonal"] = diagonal
    report["antisymmetric"] = antisym
    report["regular"] = fueter.regular and agree
    return report, fueter.regular and agree


def cmd_paper_suite(args):
    seed = args.seed if args.seed is not None else default_seed()
    keys = set(args.only.split(",")) if args.only else None
    if keys:
        unknown = keys - {row.key for row in SUITE}
        if unknown:
            raise InputError(f"unknown suite rows: {', '.join(sorted(unknown))}")
    rows = run_suite(seed, keys)
    report = {
        "seed": seed,
        "rows": [{"key": r.key, "title": r.title, "status": "PASS" if r.passed else "FAIL", "detail": r.detail}
                 for r in rows],
        "passed": sum(r.passed for r in rows),
        "total": len(rows),
    }
    return report, all(r.passed for r in rows)


def cmd_tensor_order(args):
    C = builtin_complex()
    report = tensor_order_comparison(C, C, builtin_H())
    return report, True


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------

def _render_table(report) -> str:
    if "rows" in report and "seed" in report:
        width = max(len(r["key"]) for r in report["rows"]) if report["rows"] else 0
        lines = [f"{r['key'].ljust(width)}  {r['status']}  {r['detail']}" for r in report["rows"]]
        lines.append(f"{report['passed']}/{report['total']} passed (seed {report['seed']})")
        return "\n".join(lines)
    lines: list[str] = []
    _render(report, lines, 0)
    return "\n".join(lines)


def _is_scalar(v) -> bool:
    return not isinstance(v, (dict, list))


def _render(value, lines, depth):
    pad = "  " * depth
    for key in sorted(value):
        v = value[key]
        if _is_scalar(v):
            lines.append(f"{pad}{key}: {_scalar(v)}")
        elif isinstance(v, list) and not v:
            lines.append(f"{pad}{key}: (none)")
        elif isinstance(v, list) and all(_is_scalar(t) for t in v):
            lines.append(f"{pad}{key}: {' '.join(_scalar(t) for t in v)}")
        elif isinstance(v, list) and all(isinstance(t, list) and all(_is_scalar(s) for s in t) for t in v):
            lines.append(f"{pad}{key}:")
            cells = [[_scalar(s) for s in row] for row in v]
            width = max((len(c) for row in cells for c in row), default=0)
            lines.extend(f"{pad}  " + " ".join(c.rjust(width) for c in row) for row in cells)
        elif isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            _render(v, lines, depth + 1)
        else:
            lines.append(f"{pad}{key}:")
            for n, item in enumerate(v):
                if isinstance(item, dict):
                    lines.append(f"{pad}  [{n}]")
                    _render(item, lines, depth + 2)
                else:
                    lines.append(f"{pad}  [{n}] {json.dumps(item, ensure_ascii=False)}")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def emit(report, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "table":
        stream.write(_render_table(report) + "\n")
    else:
        stream.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--a", help="quaternion parameter a (rational)")
    common.add_argument("--b", help="quaternion parameter b (rational)")

    algebra_opt = _Parser(add_help=False)
    algebra_opt.add_argument("--algebra", default="H", help="R, C, H, quaternion, CH, CCH or a JSON file")

    parser = _Parser(prog="algetower", description="Exact structural-constant algebra toolkit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("algebra", parents=[common, algebra_opt], help="emit or validate an algebra table")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("mul", parents=[common, algebra_opt], help="multiply two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mul)

    for name, func, text in (("norm", cmd_norm, "squared norm and conjugate"),
                             ("invert", cmd_invert, "inverse element")):
        p = sub.add_parser(name, parents=[common, algebra_opt], help=text)
        p.add_argument("x")
        p.set_defaults(func=func)

    p = sub.add_parser("rotate", parents=[common], help="rotate a 3-vector by a quaternion")
    p.add_argument("--q", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("tensor", parents=[common], help="tensor product of two algebras")
    p.add_argument("outer")
    p.add_argument("inner")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("tower", parents=[common], help="compose a tower from field-valued constants")
    p.add_argument("spec", help="JSON file or inline JSON with outer, inner_dim, constants")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("commutant", parents=[common, algebra_opt], help="maps commuting with left multiplications")
    p.add_argument("--generators", help="comma-separated basis indices acting by left multiplication")
    p.add_argument("--no-basis", action="store_true", help="omit the basis matrices")
    p.set_defaults(func=cmd_commutant)

    p = sub.add_parser("convert", parents=[common], help="matrix ↔ standard components over E(R,a,b)")
    p.add_argument("table", help="4×4 JSON table (inline or file)")
    p.add_argument("--to", choices=("standard", "matrix"), default="standard")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("regular-check", parents=[common], help="Fueter and relaxed Cauchy-Riemann checks")
    p.add_argument("--fn", help=f"builtin function: {', '.join(sorted(reg.BUILTIN_MONOMIALS))}")
    p.add_argument("--fn-json", help='monomial list, e.g. [[["0","1","0","0"],"x"]]')
    p.add_argument("--point", help="w,x,y,z")
    p.add_argument("--everywhere", action="store_true")
    p.set_defaults(func=cmd_regular_check)

    p = sub.add_parser("paper-suite", parents=[common], help="run every closed-form verification check")
    p.add_argument("--seed", type=int)
    p.add_argument("--only", help="comma-separated row keys")
    p.set_defaults(func=cmd_paper_suite)

    p = sub.add_parser("tensor-order", parents=[common], help="compare C⊗(C⊗H), (C⊗C)⊗H and C⊗H")
    p.set_defaults(func=cmd_tensor_order)
    return parser


def run(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    fmt = "table" if argv and "--format" in argv and argv[argv.index("--format") + 1:][:1] == ["table"] else "json"
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError("missing subcommand; run with --help for the list")
        fmt = args.format
        report, passed = args.func(args)
    except InputError as exc:
        emit({"error": {"type": "input", "message": str(exc)}}, fmt, stream)
        return EXIT_BAD_INPUT
    except (ValueError, ArithmeticError, KeyError, TypeError) as exc:
        emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, fmt, stream)
        return EXIT_BAD_INPUT
    emit(report, fmt, stream)
    return EXIT_OK if passed else EXIT_FAILED


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
