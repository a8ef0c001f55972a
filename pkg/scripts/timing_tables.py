"""Timing tables for low and high degrees, with ratios to the jacobi1 method.

Absolute seconds depend on the machine; the ratios are what carries over.

    python scripts/timing_tables.py --curves 100 --budget 60
"""
from __future__ import annotations

import argparse
import warnings
from dataclasses import dataclass, field

from glcurve.bench import BenchConfig, run_bench
from glcurve.gl_basis import PowerBasisWarning


@dataclass(frozen=True)
class Config:
    low: tuple = tuple(range(1, 16))
    high: tuple = (20, 25, 30, 35, 40, 45, 50, 100)
    curves: int = 100
    seed: int = 0
    repeats: int = 3
    budget: float = 60.0
    low_methods: tuple = ("jacobi1", "legendre", "power", "integral")
    high_methods: tuple = field(default=("jacobi1", "legendre", "integral"))


def table(title, degrees, methods, cfg):
    rows = run_bench(BenchConfig(degrees=degrees, curves_per_degree=cfg.curves, methods=methods,
                                 seed=cfg.seed, budget=cfg.budget, repeats=cfg.repeats))
    by_n = {}
    for r in rows:
        by_n.setdefault(r.n, {})[r.method] = r
    print(f"\n{title}")
    print(f"{'n':>4}" + "".join(f"{m:>22}" for m in methods))
    for n, row in by_n.items():
        base = row["jacobi1"].total_seconds
        cells = []
        for m in methods:
            r = row[m]
            cells.append("exceeded".rjust(22) if r.exceeded
                         else f"{r.total_seconds:10.3f} s ({r.total_seconds / base:5.2f}x)".rjust(22))
        best = min((r for r in row.values() if not r.exceeded), key=lambda r: r.total_seconds)
        print(f"{n:>4}" + "".join(cells) + f"   fastest: {best.method}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--curves", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--budget", type=float, default=60.0, help="seconds per (degree, method)")
    a = p.parse_args()
    cfg = Config(curves=a.curves, seed=a.seed, repeats=a.repeats, budget=a.budget)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PowerBasisWarning)
        table("low degrees", cfg.low, cfg.low_methods, cfg)
        table("high degrees", cfg.high, cfg.high_methods, cfg)


if __name__ == "__main__":
    main()
