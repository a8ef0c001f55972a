"""Basis error of each representation against the 40-digit reference.

Prints one row per degree with the error of each method, plus the largest
bracketed P^(1) coefficient of the jacobi1 form as a magnitude metric.

    python scripts/instability_report.py --degrees 5,10,15,20,25,30,40,50
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from glcurve.cli import parse_degrees
from glcurve.gl_basis import Kind, basis_rep
from glcurve.oracle import error_report


@dataclass(frozen=True)
class Config:
    degrees: tuple = (5, 10, 15, 20, 25, 30, 35, 40, 45, 50)
    grid_size: int = 201


def run(cfg: Config) -> None:
    print(f"{'n':>3}  {'power':>10}  {'legendre':>10}  {'jacobi1':>10}  {'max|g|':>8}")
    for n in cfg.degrees:
        errs = [error_report(n, k, cfg.grid_size).max_abs_error for k in Kind]
        g = basis_rep(n, Kind.JACOBI1).coeff
        gmax = float(np.max(np.abs(g))) if g.size else 0.0
        print(f"{n:>3}  " + "  ".join(f"{e:10.2e}" for e in errs) + f"  {gmax:8.4f}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--degrees", default="5,10,15,20,25,30,35,40,45,50")
    p.add_argument("--grid-size", type=int, default=201)
    a = p.parse_args()
    run(Config(parse_degrees(a.degrees), a.grid_size))


if __name__ == "__main__":
    main()
