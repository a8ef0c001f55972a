"""Render a random planar GL curve with its control polygon to SVG.

    python scripts/render_figure.py --degree 50 --seed 1 --out gl50.svg
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from glcurve.curve_engine import random_curve
from glcurve.io import write_curve_file
from glcurve.render import render_svg


@dataclass(frozen=True)
class Config:
    degree: int = 50
    seed: int = 1
    samples: int = 2000
    out: Path = Path("gl50.svg")


def run(cfg: Config) -> None:
    curve = random_curve(cfg.degree, 2, cfg.seed)
    cfg.out.write_text(render_svg(curve, cfg.samples))
    write_curve_file(cfg.out.with_suffix(".json"), curve)
    print(f"wrote {cfg.out} and {cfg.out.with_suffix('.json')}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--degree", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--out", type=Path, default=Path("gl50.svg"))
    a = p.parse_args()
    run(Config(a.degree, a.seed, a.samples, a.out))


if __name__ == "__main__":
    main()
