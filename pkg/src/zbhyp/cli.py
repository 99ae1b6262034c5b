"""Command-line front end: ``zbhyp {eval,thresholds,classify,verify,series}``.

Exit codes: 0 success, 1 verification found violations outside the known
discrepancy list, 2 invalid input (domain, precondition or config errors).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import ZbhypError
from .harness import SUITES, parse_config, run_suite
from .hyp2f1 import HypParams, hyp2f1_route
from .phi import ZbParams
from .series import FAMILIES, series_table
from .thresholds import classify_curvature, classify_monotonicity, thresholds

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([f"{v:.17g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json(doc) -> str:
    # floats use repr, the shortest round-trip form
    return json.dumps(doc, indent=2) + "\n"


def _render_record(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return _json(doc)
    flat = {k: v for k, v in doc.items() if not isinstance(v, (list, dict))}
    return _csv([list(flat), list(flat.values())])


def cmd_eval(args) -> tuple[str, int]:
    p = HypParams(args.a, args.b, args.c, args.x)
    value, route = hyp2f1_route(p.a, p.b, p.c, p.x)
    doc = {"a": p.a, "b": p.b, "c": p.c, "x": p.x, "value": value, "route": route}
    return _render_record(doc, args.format), EXIT_OK


def cmd_thresholds(args) -> tuple[str, int]:
    tb = thresholds(ZbParams(args.a, args.b))
    doc = {"a": args.a, "b": args.b, **tb.as_dict()}
    doc["notes"] = [
        "R: -2 gamma - psi(a) - psi(b)",
        "inv_sum: 1/a + 1/b",
        "c_ab: closed-form concavity threshold of phi",
        "alpha0, delta_plus: max and min of phi_+ on [0, 1] (scan + golden section)",
        "delta_minus: max of phi_- on [0, 1 - 1e-6] (scan + golden section)",
        "g_ratio_up: (R(a,b) - R(a+1/2,b+1/2)) / B(a+1/2,b+1/2)",
    ]
    return _render_record(doc, args.format), EXIT_OK


def cmd_classify(args) -> tuple[str, int]:
    p = ZbParams(args.a, args.b)
    n = args.n if args.n is not None else (args.grid or 512)
    curv = classify_curvature(p, args.c, target=args.target, n=n)
    mono = classify_monotonicity(p, args.c, n=n)
    doc = {
        "a": p.a, "b": p.b, "c": args.c, "target": args.target, "n": n,
        "curvature": curv.verdict, "curvature_witness": curv.witness,
        "min_second": curv.min_second, "max_second": curv.max_second,
        "monotonicity": mono.verdict, "monotonicity_witness": mono.witness,
        "min_slope": mono.min_slope, "max_slope": mono.max_slope,
    }
    return _render_record(doc, args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    text = Path(args.config).read_text() if args.config else ""
    cfg = parse_config(text, suite=args.suite, tol=args.tol, grid=args.grid, workers=args.workers)
    rep = run_suite(cfg)
    out = rep.to_json() + "\n" if args.format == "json" else rep.to_csv()
    return out, EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_series(args) -> tuple[str, int]:
    table = series_table(args.family, args.n)
    return (table.to_json() + "\n" if args.format == "json" else table.to_csv()), EXIT_OK


def _global_flags(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv"), default=d("json"))
    parser.add_argument("--out", default=d(None), help="write output here instead of stdout")
    parser.add_argument("--tol", type=float, default=d(None), help="inequality tolerance override")
    parser.add_argument("--grid", type=int, default=d(None), help="grid size override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zbhyp", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        _global_flags(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate 2F1(a, b; c; x) and report the route")
    for k in ("a", "b", "c", "x"):
        sp.add_argument(f"--{k}", type=float, required=True)

    sp = add("thresholds", cmd_thresholds, "threshold bundle for (a, b)")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)

    sp = add("classify", cmd_classify, "curvature and monotonicity verdicts")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--target", choices=("phi", "f_ratio"), default="phi")
    sp.add_argument("--n", type=int, default=None)

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--config", default=None, help="flat key = value config file")
    sp.add_argument("--workers", type=int, default=None)

    sp = add("series", cmd_series, "coefficient table")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--n", type=int, default=10)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (ZbhypError, OSError) as exc:
        print(f"zbhyp {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
