"""Command-line interface: normal-order expressions, emit matrices, run the
verification suites and manage golden files.

Exit codes: 0 success; 1 failed identity or golden mismatch; 2 parse, usage
or missing-file error; 3 term-count guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import expmap, goldens
from .algebra_a import a_parse
from .algebra_u import u_parse
from .render import render_matrix, render_poly
from .rewrite import GuardExceeded, ParseError
from .scalars import ScalarError
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qexpmap",
        description="Exact symbolic toolkit for the two-parameter quantum "
                    "group of 2x2 matrices and its dual algebra.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "latex"),
                       default="text")

    p = sub.add_parser("normal-order", help="normal-order an expression")
    p.add_argument("--algebra", choices=("A", "U"), default="A")
    p.add_argument("expr")
    add_format(p)

    p = sub.add_parser("tmatrix", help="emit an exponentiated T-matrix")
    p.add_argument("--j", type=_fraction, required=True)
    p.add_argument("--z", type=_fraction, required=True)
    p.add_argument("--norm", choices=("symmetric", "rational"),
                   default="symmetric")
    p.add_argument("--form", choices=("closed", "factorized"),
                   default="closed")
    add_format(p)

    p = sub.add_parser("lmatrix", help="emit a spin-j L-matrix")
    p.add_argument("--sign", choices=("+", "-"), required=True)
    p.add_argument("--j", type=_fraction, required=True)
    p.add_argument("--norm", choices=("symmetric", "rational"),
                   default="symmetric")
    add_format(p)

    p = sub.add_parser("rmatrix", help="emit a represented R-matrix")
    p.add_argument("--j1", type=_fraction, required=True)
    p.add_argument("--z1", type=_fraction, required=True)
    p.add_argument("--j2", type=_fraction, required=True)
    p.add_argument("--z2", type=_fraction, required=True)
    p.add_argument("--norm", choices=("symmetric", "rational"),
                   default="rational")
    add_format(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-j", type=_fraction, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--j", type=_fraction, default=None)
    p.add_argument("--z", type=_fraction, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("golden", help="record or compare golden files")
    p.add_argument("action", choices=("record", "compare"))
    p.add_argument("path")
    return top


def _cmd_normal_order(args) -> int:
    parse = a_parse if args.algebra == "A" else u_parse
    poly = parse(args.expr)
    print(render_poly(poly, args.format))
    return EXIT_OK


def _half_integer(name, value):
    if (2 * value).denominator != 1 or value < 0:
        raise ScalarError(f"{name} must be a non-negative half-integer")


def _cmd_tmatrix(args) -> int:
    _half_integer("j", args.j)
    build = expmap.t_matrix_closed if args.form == "closed" \
        else expmap.t_matrix_factorized
    print(render_matrix(build(args.j, args.z, args.norm), args.format))
    return EXIT_OK


def _cmd_lmatrix(args) -> int:
    _half_integer("j", args.j)
    print(render_matrix(expmap.l_matrix(args.sign, args.j, args.norm),
                        args.format))
    return EXIT_OK


def _cmd_rmatrix(args) -> int:
    _half_integer("j1", args.j1)
    _half_integer("j2", args.j2)
    print(render_matrix(
        expmap.r_matrix_rep(args.j1, args.z1, args.j2, args.z2, args.norm),
        args.format))
    return EXIT_OK


def _cmd_verify(args) -> int:
    opts = {}
    if args.max_j is not None:
        opts["max_j"] = args.max_j
    if args.max_len is not None:
        opts["max_len"] = args.max_len
    if args.j is not None:
        opts["j"] = args.j
    if args.z is not None:
        opts["z"] = args.z
    results = run_suite(args.suite, **opts)
    report = {"suite": args.suite,
              "pass": all(r.passed for r in results),
              "checks": [r.to_json() for r in results]}
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def _cmd_golden(args) -> int:
    if args.action == "record":
        written = goldens.record(args.path)
        print(json.dumps({"recorded": written}))
        return EXIT_OK
    try:
        mismatches = goldens.compare(args.path)
    except FileNotFoundError as exc:
        print(f"missing golden file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps({"mismatches": mismatches}))
    return EXIT_OK if not mismatches else EXIT_FAIL


_HANDLERS = {
    "normal-order": _cmd_normal_order,
    "tmatrix": _cmd_tmatrix,
    "lmatrix": _cmd_lmatrix,
    "rmatrix": _cmd_rmatrix,
    "verify": _cmd_verify,
    "golden": _cmd_golden,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ScalarError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
