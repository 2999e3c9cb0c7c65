"""Command line front end.

CSV goes to stdout (or ``--out``); diagnostics and summaries go to stderr.
Exit codes: 0 success, 1 failed verification or computation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

import numpy as np

from . import config
from .core import BetaGamma, check_degree, derivative, eval_closed, make_params, second_derivative
from .errors import BgChebError
from .gram import gram_table
from .interp import Interpolant, lebesgue_constant, lebesgue_function
from .nodes import (
    TrimSpec,
    bg_chebyshev_zeros,
    bg_cl_points,
    equispaced,
    trimmed_cl,
)
from .verify import SUITES, run_suite

NODE_KINDS = ("bg-zeros", "bg-cl", "equispaced", "trim")
FIGURES = ("fig1-left", "fig1-right", "fig2-left", "fig2-right")
# flags whose values may start with '-'
_RANGE_FLAGS = ("--range", "--interval")


class UsageError(Exception):
    pass


def fmt(v) -> str:
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return format(float(v), ".17g")


def parse_range(text: str, with_steps: bool = True):
    parts = text.split(":")
    try:
        if with_steps:
            lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
        else:
            lo, hi = float(parts[0]), float(parts[1])
    except (IndexError, ValueError):
        form = "lo:hi:steps" if with_steps else "lo:hi"
        raise UsageError(f"expected {form}, got {text!r}") from None
    if len(parts) != (3 if with_steps else 2):
        raise UsageError(f"malformed range {text!r}")
    if not lo < hi:
        raise UsageError(f"range needs lo < hi, got {text!r}")
    if with_steps:
        if steps < 1:
            raise UsageError("steps must be >= 1")
        return np.linspace(lo, hi, steps + 1)
    return lo, hi


def _params(args) -> BetaGamma:
    try:
        return make_params(args.beta, args.gamma)
    except BgChebError as exc:
        raise UsageError(str(exc)) from None


def _degree(value, name: str, minimum: int = 0) -> int:
    try:
        return check_degree(value, minimum)
    except BgChebError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _build_nodes(args):
    n = _degree(args.n, "n", 1)
    if args.kind == "trim":
        if args.k1 is None or args.k2 is None:
            raise UsageError("--kind trim requires --k1 and --k2")
        try:
            trim = TrimSpec(args.k1, args.k2)
        except BgChebError as exc:
            raise UsageError(str(exc)) from None
        if n < 2:
            raise UsageError("--kind trim needs --n >= 2")
        return lambda: trimmed_cl(n, trim)
    p = _params(args)
    if args.kind == "bg-zeros":
        return lambda: bg_chebyshev_zeros(p, n)
    if args.kind == "bg-cl":
        # --n is the degree: n + 1 points
        return lambda: bg_cl_points(p, n + 1)
    if n < 2:
        raise UsageError("--kind equispaced needs --n >= 2")
    return lambda: equispaced(p, n)


def _write_csv(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])


def cmd_eval(args):
    p = _params(args)
    n = _degree(args.n, "n")
    if args.range is not None:
        xs = parse_range(args.range)
    elif args.x:
        xs = np.asarray(args.x, dtype=float)
    else:
        raise UsageError("give --x or --range")
    if np.any(np.abs(xs) > 1 + 1e-12):
        raise UsageError("abscissae must lie in [-1, 1]")

    def run(out):
        rows = []
        for x in xs:
            t = eval_closed(p, n, x)
            if abs(x) >= 1 - 1e-12:
                rows.append((x, t, "", ""))
            else:
                rows.append((x, t, derivative(p, n, x), second_derivative(p, n, x)))
        _write_csv(out, ("x", "T", "dT", "d2T"), rows)
        return 0

    return run


def cmd_nodes(args):
    make = _build_nodes(args)

    def run(out):
        _write_csv(out, ("j", "x"), enumerate(make().points))
        return 0

    return run


def cmd_gram(args):
    p = _params(args)
    m = _degree(args.max_degree, "max-degree")

    def run(out):
        _write_csv(out, ("r", "s", "value"), gram_table(p, m).entries())
        return 0

    return run


def cmd_lebesgue(args):
    make = _build_nodes(args)
    lo, hi = parse_range(args.interval, with_steps=False)
    if args.grid_per_gap < 8:
        raise UsageError("--grid-per-gap must be >= 8")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")

    def run(out):
        interp = Interpolant.from_nodes(make())
        xs = np.linspace(lo, hi, args.samples + 1)
        _write_csv(out, ("x", "lambda"), zip(xs, lebesgue_function(interp, xs)))
        rep = lebesgue_constant(interp, (lo, hi), args.grid_per_gap)
        print(
            f"lebesgue_constant={fmt(rep.constant)} argmax={fmt(rep.argmax)} "
            f"n_samples={rep.n_samples} refined={rep.refined}",
            file=sys.stderr,
        )
        return 0

    return run


def cmd_verify(args):
    if args.n_max is not None and args.n_max < 2:
        raise UsageError("--n-max must be >= 2")
    overrides = {name: getattr(args, f"tol_{name}") for name in config.Tolerances.names()}
    overrides = {k: v for k, v in overrides.items() if v is not None}
    tol = replace(config.DEFAULT_TOLERANCES, **overrides)

    def run(out):
        reports = run_suite(args.suite, args.n_max, tol, seed=args.seed)
        rows = []
        for rep in reports:
            for c in rep.checks:
                rows.append((rep.suite, c.identity, c.params, c.max_residual, c.tolerance, "pass" if c.passed else "FAIL"))
        _write_csv(out, ("suite", "identity", "params", "max_residual", "tolerance", "status"), rows)
        total = sum(len(r.checks) for r in reports)
        failed = sum(not c.passed for r in reports for c in r.checks)
        for rep in reports:
            print(f"{rep.suite}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.checks)} checks)", file=sys.stderr)
        print(f"verify: {total - failed}/{total} checks passed", file=sys.stderr)
        return 0 if failed == 0 else 1

    return run


def _figure_rows(panel: str, steps: int):
    if panel.startswith("fig1"):
        p, n = (make_params(1, 0.1), 5) if panel == "fig1-left" else (make_params(0.3, 0.4), 6)
        xs = np.linspace(-1.0, 1.0, steps + 1)
        for x in xs:
            yield ("T", x, eval_closed(p, n, x))
        for x in bg_chebyshev_zeros(p, n).points[::-1]:
            yield ("zero", x, 0.0)
        return
    trim = TrimSpec(1, 0) if panel == "fig2-left" else TrimSpec(1, 1)
    xs = np.linspace(-1.0, 1.0, steps + 1)
    for n in (5, 6, 7):
        interp = Interpolant.from_nodes(trimmed_cl(n, trim))
        for x, v in zip(xs, lebesgue_function(interp, xs)):
            yield (f"n={n}", x, v)


def cmd_figure(args):
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")

    def run(out):
        _write_csv(out, ("series", "x", "y"), _figure_rows(args.panel, args.steps))
        return 0

    return run


def _add_params(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--beta", type=float, required=required, default=None if required else 0.0)
    p.add_argument("--gamma", type=float, required=required, default=None if required else 0.0)


def _add_node_flags(p: argparse.ArgumentParser):
    p.add_argument("--kind", choices=NODE_KINDS, required=True)
    _add_params(p, required=False)
    p.add_argument("--n", type=int, required=True, help="degree for bg-cl, point count otherwise")
    p.add_argument("--k1", type=int, help="points trimmed at the left end (kind trim)")
    p.add_argument("--k2", type=int, help="points trimmed at the right end (kind trim)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write CSV to this file instead of stdout")
    parser = argparse.ArgumentParser(prog="bgcheb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate T_n and its derivatives")
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float, nargs="+")
    p.add_argument("--range", help="lo:hi:steps, steps+1 samples inclusive")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("nodes", parents=[common], help="export a node set")
    _add_node_flags(p)
    p.set_defaults(handler=cmd_nodes)

    p = sub.add_parser("gram", parents=[common], help="weighted Gram table of T_0..T_max")
    _add_params(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(handler=cmd_gram)

    p = sub.add_parser("lebesgue", parents=[common], help="Lebesgue function samples and constant")
    _add_node_flags(p)
    p.add_argument("--interval", default="-1:1", help="lo:hi (default -1:1)")
    p.add_argument("--samples", type=int, default=1000, help="CSV sample intervals")
    p.add_argument("--grid-per-gap", type=int, default=32)
    p.set_defaults(handler=cmd_lebesgue)

    p = sub.add_parser("verify", parents=[common], help="run identity verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--n-max", type=int, help="override the suite's largest degree")
    p.add_argument("--seed", type=int, default=0, help="seed for random sample pairs")
    for name in config.Tolerances.names():
        p.add_argument(f"--tol-{name}", type=float, default=None, metavar="TOL")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("figure", parents=[common], help="CSV data behind the figures")
    p.add_argument("--panel", choices=FIGURES, required=True)
    p.add_argument("--steps", type=int, default=400)
    p.set_defaults(handler=cmd_figure)
    return parser


def _join_range_values(argv):
    # argparse takes '-1:1' for an option; glue it to its flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_join_range_values(argv))
    try:
        run = args.handler(args)
    except UsageError as exc:
        parser.error(str(exc))
    buf = io.StringIO()
    try:
        code = run(buf)
    except BgChebError as exc:
        print(f"bgcheb: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
