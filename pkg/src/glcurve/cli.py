"""``glcurve`` command line interface.

Exit codes: 0 success, 2 input error, 3 parameter outside [-1, 1],
4 time budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import warnings

import numpy as np

from .bench import METHODS, BenchConfig, Grid, run_bench
from .curve_engine import check_params, eval_integral, eval_many, prepare
from .gl_basis import Kind, PowerBasisWarning
from .io import CurveFileError, fmt, read_curve_file
from .oracle import error_report
from .ortho_core import DomainError, legendre_roots
from .render import render_svg

EXIT_INPUT, EXIT_DOMAIN, EXIT_BUDGET = 2, 3, 4


class UsageError(Exception):
    pass


def parse_degrees(text: str) -> tuple:
    """``"1..15"``, ``"20,25,30"`` or mixtures such as ``"1..3,10"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise UsageError(f"bad degree list {text!r}")
    return tuple(out)


def _threads():
    value = os.environ.get("GLCURVE_THREADS")
    return max(1, int(value)) if value else None


def _open_out(path):
    return open(path, "w", newline="") if path else sys.stdout


def cmd_roots(args):
    if args.n < 1:
        raise UsageError("n must be >= 1")
    for x in legendre_roots(args.n).tau:
        print(fmt(x))


def cmd_eval(args):
    cf = read_curve_file(args.curve)
    curve = cf.to_curve()
    if args.at is not None:
        try:
            ts = np.array([float(v) for v in args.at.split(",")])
        except ValueError as exc:
            raise UsageError(f"bad parameter list: {exc}") from exc
    elif args.grid is not None:
        if args.grid < 2:
            raise UsageError("--grid needs at least 2 points")
        ts = np.linspace(-1.0, 1.0, args.grid)
    else:
        ts = Grid().points()
    ts = check_params(ts)
    if args.method == "integral":
        pts = eval_integral(curve, ts)
    else:
        pts = eval_many(prepare(curve, args.method), ts, workers=_threads())
    out = _open_out(args.out)
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["t"] + [f"x{j + 1}" for j in range(curve.d)])
        for t, p in zip(ts, pts):
            w.writerow([fmt(t)] + [fmt(v) for v in p])
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_compare(args):
    if args.degree < 1 or args.grid_size < 2:
        raise UsageError("need --degree >= 1 and --grid-size >= 2")
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "method", "max_abs_error", "mean_abs_error"])
    for kind in Kind:
        r = error_report(args.degree, kind, args.grid_size)
        w.writerow([r.n, r.kind, fmt(r.max_abs_error), fmt(r.mean_abs_error)])


def cmd_bench(args):
    methods = tuple(m.strip() for m in args.methods.split(","))
    try:
        config = BenchConfig(
            degrees=parse_degrees(args.degrees),
            curves_per_degree=args.curves,
            grid=Grid(count=args.grid_count),
            methods=methods,
            seed=args.seed,
            dimension=args.dimension,
            budget=args.budget,
            repeats=args.repeats,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "method", "total_seconds"])

    def emit(row):
        w.writerow([row.n, row.method, "exceeded" if row.exceeded else f"{row.total_seconds:.6f}"])
        sys.stdout.flush()

    rows = run_bench(config, progress=emit)
    if any(r.exceeded for r in rows):
        return EXIT_BUDGET


def cmd_render(args):
    curve = read_curve_file(args.curve).to_curve()
    if curve.d != 2:
        raise UsageError(f"render needs a 2D curve, got dimension {curve.d}")
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    svg = render_svg(curve, args.samples, args.method)
    with open(args.out, "w") as fh:
        fh.write(svg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glcurve", description="Gauss-Legendre curve toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", help="zeros of the Legendre polynomial P_n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("eval", help="evaluate a curve file")
    s.add_argument("--curve", required=True)
    s.add_argument("--method", choices=METHODS, default="jacobi1")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--grid", type=int, help="number of uniform points on [-1, 1]")
    g.add_argument("--at", help="comma separated parameters")
    s.add_argument("--out")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("compare", help="basis error of each representation")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--grid-size", type=int, default=201)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("bench", help="timing of the evaluation methods")
    s.add_argument("--degrees", default="1..15")
    s.add_argument("--curves", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=float, default=float("inf"),
                   help="seconds per (degree, method) before giving up")
    s.add_argument("--methods", default=",".join(METHODS))
    s.add_argument("--dimension", type=int, default=2)
    s.add_argument("--grid-count", type=int, default=4999)
    s.add_argument("--repeats", type=int, default=1,
                   help="time each curve this often and keep the fastest run")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("render", help="write an SVG of a planar curve")
    s.add_argument("--curve", required=True)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--method", choices=[k.value for k in Kind], default="jacobi1")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_render)
    return p


def _attach_negative_values(argv):
    # "--at -1,1" would otherwise be read as an unknown option
    out = []
    for tok in argv:
        if out and out[-1] == "--at" and tok.startswith("-"):
            out[-1] = f"--at={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default", PowerBasisWarning)
            return args.func(args) or 0
    except DomainError as exc:
        print(f"glcurve: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, CurveFileError) as exc:
        print(f"glcurve: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
