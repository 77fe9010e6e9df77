"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when verification fails.
Errors are written to stderr as one JSON object ``{"error": ..., "message": ...}``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .algebra import format_scalar, scalar
from .deriv_weights import deriv_weights
from .errors import WeightsError
from .oracle import run_suite, verify_family
from .stencil import Stencil, stencil_from_json
from .weights import positivity_offsets, weights_by_recurrence, weights_explicit

EXIT_OK, EXIT_INVALID, EXIT_VERIFY_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(v) -> str:
    return format_scalar(v)


def _json_scalar(v, exact: bool):
    return format_scalar(v) if exact else v


def _load_stencil(args) -> Stencil:
    if args.stencil and args.stencil_file:
        raise UsageError("give either --stencil or --stencil-file, not both")
    if args.stencil:
        text = args.stencil
    elif args.stencil_file:
        with open(args.stencil_file) as fh:
            text = fh.read()
    else:
        raise UsageError("a stencil is required (--stencil or --stencil-file)")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stencil is not valid JSON: {exc}") from None
    return stencil_from_json(obj, args.mode)


def _levels(s: Stencil, ks: int | None) -> list[int]:
    return [ks] if ks is not None else list(range(1, s.M))


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    line = lambda r: "  ".join(str(c).rjust(w) for c, w in zip(r, widths))
    sep = "  ".join("-" * w for w in widths)
    return "\n".join([line(header), sep] + [line(r) for r in rows])


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(args, payload, header, rows) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=None if args.compact else 2)
    if args.format == "csv":
        return _csv(header, rows)
    return _table(header, rows)


# commands

def cmd_weights(args) -> tuple[int, str]:
    s = _load_stencil(args)
    build = weights_explicit if args.method == "explicit" else weights_by_recurrence
    fams = [build(s, K) for K in _levels(s, args.ks)]
    width = max(f.k_level for f in fams) + 1
    header = ["K_s", "k_s"] + [f"c{j}" for j in range(width)]
    rows = []
    for f in fams:
        for k, p in enumerate(f.sigmas):
            cs = [_fmt(c) for c in p.coeffs]
            rows.append([f.k_level, k] + cs + ["0"] * (width - len(cs)))
    payload = fams[0].to_json() if args.ks is not None else [f.to_json() for f in fams]
    return EXIT_OK, _emit(args, payload, header, rows)


def cmd_deriv_weights(args) -> tuple[int, str]:
    s = _load_stencil(args)
    fams = [deriv_weights(s, K, args.n) for K in _levels(s, args.ks)]
    header = ["K_s", "n", "k_s", "part", "coefficients"]
    rows = []
    for f in fams:
        for k, r in enumerate(f.sigmas):
            rows.append([f.k_level, f.deriv_order, k, "num", " ".join(_fmt(c) for c in r.num.coeffs)])
            rows.append([f.k_level, f.deriv_order, k, "den", " ".join(_fmt(c) for c in r.den.coeffs)])
        rows.append([f.k_level, f.deriv_order, "", "pole_poly", " ".join(_fmt(c) for c in f.pole_poly.coeffs)])
    payload = fams[0].to_json() if args.ks is not None else [f.to_json() for f in fams]
    return EXIT_OK, _emit(args, payload, header, rows)


def _offset_label(ell: int) -> str:
    if ell == 0:
        return "x_{i}"
    return f"x_{{i{ell:+d}}}"


def cmd_positivity(args) -> tuple[int, str]:
    s = _load_stencil(args)
    levels = [args.ks] if args.ks is not None else list(range(1, math.ceil(Fraction(s.M, 2)) + 1))
    out = []
    rows = []
    for K in levels:
        lo, hi = positivity_offsets(s, K)
        out.append({
            "K_s": K,
            "interval": [_json_scalar(s.node(lo), s.exact), _json_scalar(s.node(hi), s.exact)],
            "offsets": [lo, hi],
            "labels": [_offset_label(lo), _offset_label(hi)],
        })
        rows.append([K, _offset_label(lo), _offset_label(hi), _fmt(s.node(lo)), _fmt(s.node(hi))])
    payload = out[0] if args.ks is not None else out
    return EXIT_OK, _emit(args, payload, ["K_s", "lo", "hi", "x_lo", "x_hi"], rows)


def cmd_eval(args) -> tuple[int, str]:
    s = _load_stencil(args)
    if not args.at:
        raise UsageError("eval needs at least one --at point")
    fam = weights_explicit(s, args.ks) if args.n == 0 else deriv_weights(s, args.ks, args.n)
    points = []
    rows = []
    for raw in args.at:
        x = scalar(raw, s.exact)
        vals = fam(x)
        points.append({"x": _json_scalar(x, s.exact),
                       "weights": [_json_scalar(v, s.exact) for v in vals]})
        rows.append([_fmt(x)] + [_fmt(v) for v in vals])
    payload = {"K_s": args.ks, "n": args.n, "points": points}
    header = ["x"] + [f"w{k}" for k in range(args.ks + 1)]
    return EXIT_OK, _emit(args, payload, header, rows)


def cmd_verify(args) -> tuple[int, str]:
    if args.stencil or args.stencil_file:
        s = _load_stencil(args)
        if args.ks is None:
            raise UsageError("verify with a stencil needs --ks")
        reports = [verify_family(s, args.ks, args.n, args.trials, args.seed)]
    else:
        reports = list(run_suite(args.max_m, args.trials, args.seed, jobs=args.jobs))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = "\n".join(json.dumps(r.to_json()) for r in reports)
    else:
        header = ["M", "K_s", "n", "status", "max_discrepancy", "detail"]
        rows = [[r.case["M"], r.case["K_s"], r.case["n"], r.status, _fmt(r.max_discrepancy), r.detail]
                for r in reports]
        text = _csv(header, rows) if args.format == "csv" else _table(header, rows)
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="neville-weights",
                     description="Weight-functions combining substencil interpolants into the full "
                                 "Lagrange interpolant and its derivatives.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--stencil", help='inline JSON, e.g. \'{"m_minus":1,"m_plus":1,"nodes":["-1","0","1"]}\'')
        p.add_argument("--stencil-file", help="path to a JSON stencil descriptor")
        p.add_argument("--mode", choices=["exact", "float"], default=None,
                       help="scalar mode (default: exact for string nodes, float for numbers)")
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        p.add_argument("--compact", action="store_true", help="single-line JSON")

    p = sub.add_parser("weights", help="interpolation weight polynomials")
    common(p)
    p.add_argument("--ks", type=int, help="subdivision level (default: all)")
    p.add_argument("--method", choices=["explicit", "recurrence"], default="explicit")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("deriv-weights", help="rational weights for the n-th derivative")
    common(p)
    p.add_argument("--ks", type=int, help="subdivision level (default: all valid)")
    p.add_argument("--n", type=int, required=True, help="derivative order")
    p.set_defaults(func=cmd_deriv_weights)

    p = sub.add_parser("positivity", help="interval where all weights lie in [0, 1]")
    common(p)
    p.add_argument("--ks", type=int, help="subdivision level (default: 1..ceil(M/2))")
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("eval", help="weight values at given points")
    common(p)
    p.add_argument("--ks", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--at", action="append", default=[], help="evaluation point (repeatable)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="exact verification suite")
    common(p)
    p.add_argument("--ks", type=int, help="subdivision level (with --stencil)")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, text = args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "UsageError", "message": str(exc)}), file=stderr)
        return EXIT_INVALID
    except (WeightsError, ValueError, ZeroDivisionError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return EXIT_INVALID
    print(text, file=stdout)
    return status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
