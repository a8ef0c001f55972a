"""Timing harness: prepare once, evaluate a fixed grid, per method and degree."""
from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from .curve_engine import GLCurve, eval_integral, eval_many, prepare
from .gl_basis import PowerBasisWarning

METHODS = ("jacobi1", "legendre", "power", "integral")


@dataclass(frozen=True)
class Grid:
    start: float = -1.0
    step: float = 1 / 2500
    count: int = 4999

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError("grid step must be positive")
        if self.count < 1:
            raise ValueError("grid needs at least one point")

    def points(self) -> np.ndarray:
        """``start + i*step`` for ``i = 1..count`` (the default is -1 + i/2500)."""
        return self.start + np.arange(1, self.count + 1) * self.step


@dataclass(frozen=True)
class BenchConfig:
    degrees: tuple = tuple(range(1, 16))
    curves_per_degree: int = 100
    grid: Grid = field(default_factory=Grid)
    methods: tuple = METHODS
    seed: int = 0
    dimension: int = 2
    budget: float = float("inf")
    #: each curve is timed this many times per method and the fastest run kept
    repeats: int = 1

    def __post_init__(self):
        if any(n < 1 for n in self.degrees):
            raise ValueError("degrees must be >= 1")
        if self.curves_per_degree < 1 or self.repeats < 1:
            raise ValueError("curves_per_degree and repeats must be >= 1")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")


@dataclass
class BenchRow:
    n: int
    method: str
    total_seconds: float
    exceeded: bool = False


def make_curves(n: int, count: int, dimension: int, seed: int) -> list[GLCurve]:
    """Deterministic test set for one degree, uniform over ``[-1, 1]^d``."""
    rng = np.random.default_rng([seed, n])
    return [GLCurve(rng.uniform(-1.0, 1.0, size=(n + 1, dimension))) for _ in range(count)]


def evaluate(method: str, curve: GLCurve, ts) -> np.ndarray:
    if method == "integral":
        return eval_integral(curve, ts)
    return eval_many(prepare(curve, method), ts)


def time_once(method: str, curve: GLCurve, ts, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        evaluate(method, curve, ts)
        best = min(best, time.perf_counter() - t0)
    return best


def run_degree(n: int, config: BenchConfig) -> list[BenchRow]:
    """Time every method on the degree-n test set.

    Methods are interleaved curve by curve so that load fluctuations hit all of
    them alike.  A method whose running total passes ``config.budget`` is
    dropped and reported as exceeded.
    """
    ts = config.grid.points()
    curves = make_curves(n, config.curves_per_degree, config.dimension, config.seed)
    totals = dict.fromkeys(config.methods, 0.0)
    exceeded = set()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PowerBasisWarning)
        # fill the per-degree root and basis caches outside the timed region
        for method in config.methods:
            evaluate(method, curves[0], ts[:2])
        for c in curves:
            for method in config.methods:
                if method in exceeded:
                    continue
                totals[method] += time_once(method, c, ts, config.repeats)
                if totals[method] > config.budget:
                    exceeded.add(method)
    return [BenchRow(n, m, totals[m], m in exceeded) for m in config.methods]


def run_bench(config: BenchConfig, progress=None) -> list[BenchRow]:
    rows = []
    for n in config.degrees:
        for row in run_degree(n, config):
            rows.append(row)
            if progress:
                progress(row)
    return rows
