"""Command-line surface.

Subcommands: count, enumerate, sigma, sigma-inv, fixed-points, series,
tables, verify, render.  Identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage or input
error.

Polynomials print either as canonical text (``--format text``) or as the
JSON term-record list (``--format json``).  ``render`` additionally
accepts ``--format svg``.  Note ``--eval=-3,4,16``: use the ``=`` form
when the first coordinate is negative.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijection, formulas, render, verify
from .enumeration import Constraints, generate, weight_sum
from .paths import PathError, parse_pattern, parse_word
from .polyring import Polynomial
from .series import KINDS, expand

_OEIS_ROWS = [
    # (label, (a, b, c), OEIS id printed as a display label only)
    ("(0,1,1)", (0, 1, 1), "A000108"),
    ("(1,0,1)", (1, 0, 1), "A001006"),
    ("(1,1,1)", (1, 1, 1), "A006318"),
    ("(1,0,2)", (1, 0, 2), "A025235"),
    ("(-3,4,16)", (-3, 4, 16), "A059231"),
]


def _poly_out(poly: Polynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(poly.to_json_obj(), separators=(",", ":"))
    return str(poly)


def _parse_eval(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise PathError(f"--eval expects three integers, got {text!r}")
    try:
        va, vb, vc = (int(p) for p in parts)
    except ValueError:
        raise PathError(f"--eval expects integers, got {text!r}") from None
    return va, vb, vc


def _constraints(args: argparse.Namespace) -> Constraints:
    avoid: tuple[str, ...] = ()
    if args.avoid:
        avoid = tuple(parse_pattern(tok) for tok in args.avoid.split(","))
    return Constraints(avoid=avoid, forbid_h_on_axis=args.no_h_on_axis)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmotzkin",
        description="Exact computations on weighted G-Motzkin paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="path length (x extent)")
        p.add_argument("--avoid", default="", help="comma-separated patterns over udhv")
        p.add_argument("--no-h-on-axis", action="store_true", dest="no_h_on_axis")

    p = sub.add_parser("count", help="weight-sum polynomial or its integer value")
    add_class_flags(p)
    p.add_argument("--eval", dest="eval_point", help="a,b,c integers (use --eval=-3,4,16)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="list all paths of one length")
    add_class_flags(p)

    p = sub.add_parser("sigma", help="apply the bijection to one uvv-avoiding path")
    p.add_argument("--path", required=True)

    p = sub.add_parser("sigma-inv", help="apply the inverse to one uvu-avoiding path")
    p.add_argument("--path", required=True)

    p = sub.add_parser("fixed-points", help="count (and list) fixed points of sigma")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", dest="list_paths")

    p = sub.add_parser("series", help="expand a generating function")
    p.add_argument("--gf", required=True, choices=KINDS)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--eval", dest="eval_point", help="a,b,c integers")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("tables", help="reproduce the specialization and fixed-point tables")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")

    p = sub.add_parser("render", help="draw one path as ASCII art or SVG")
    p.add_argument("--path", required=True)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    return parser


def _cmd_count(args: argparse.Namespace) -> int:
    poly = weight_sum(args.n, _constraints(args))
    if args.eval_point:
        print(poly.eval(*_parse_eval(args.eval_point)))
    else:
        print(_poly_out(poly, args.format))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for word in generate(args.n, _constraints(args)):
        print(word)
    return 0


def _cmd_sigma(args: argparse.Namespace, inverse: bool) -> int:
    word = parse_word(args.path)
    print(bijection.sigma_inv(word) if inverse else bijection.sigma(word))
    return 0


def _cmd_fixed_points(args: argparse.Namespace) -> int:
    counts = bijection.fixed_points(args.n, include_paths=args.list_paths)
    print(f"F={counts.f} a={counts.a} b={counts.b} c={counts.c}")
    if args.list_paths and counts.paths is not None:
        from .paths import STEP_ORDER

        for word in sorted(counts.paths, key=lambda w: [STEP_ORDER[ch] for ch in w]):
            print(word)
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise PathError("--order must be nonnegative")
    s = expand(args.gf, args.order)
    if args.eval_point:
        for value in s.evaluate(*_parse_eval(args.eval_point)):
            print(value)
    else:
        for poly in s.coeffs:
            print(_poly_out(poly, args.format))
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    nmax = args.max_n
    if nmax < 0:
        raise PathError("--max-n must be nonnegative")
    polys = [formulas.g_uvv_closed(n, 1) for n in range(nmax + 1)]
    print(f"uvv-avoiding weight specializations, n = 0..{nmax}")
    for label, point, oeis in _OEIS_ROWS:
        values = " ".join(str(p.eval(*point)) for p in polys)
        print(f"  {label:<10} {oeis}: {values}")
    from .polyring import VAR_B, ZERO

    motzkin_ok = all(
        polys[n].substitute("b", ZERO).substitute("c", VAR_B)
        == formulas.motzkin_weight(n)
        for n in range(nmax + 1)
    )
    schroder_ok = all(
        polys[n].substitute("c", VAR_B * VAR_B) == formulas.schroder_weight(n)
        for n in range(nmax + 1)
    )
    print(f"  {'(a,0,b)':<10} Motzkin polynomial M_n(a,b): {'ok' if motzkin_ok else 'MISMATCH'}")
    print(f"  {'(a,b,b^2)':<10} Schroeder polynomial S_n(a,b): {'ok' if schroder_ok else 'MISMATCH'}")
    f_seq, _, _, _ = formulas.fixed_point_sequences(nmax)
    print(f"fixed points of sigma, n = 0..{nmax}")
    print("  F_n: " + " ".join(str(v) for v in f_seq))
    return 0 if motzkin_ok and schroder_ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise PathError("--max-n must be nonnegative")
    harness = verify.Harness(max_n=args.max_n)
    results = harness.run_all()
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.ok)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _cmd_render(args: argparse.Namespace) -> int:
    word = parse_word(args.path)
    if args.format == "svg":
        print(render.render_svg(word))
    else:
        print(render.render_ascii(word))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "sigma":
            return _cmd_sigma(args, inverse=False)
        if args.command == "sigma-inv":
            return _cmd_sigma(args, inverse=True)
        if args.command == "fixed-points":
            return _cmd_fixed_points(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "tables":
            return _cmd_tables(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "render":
            return _cmd_render(args)
        raise AssertionError(f"unhandled command {args.command}")
    except PathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
