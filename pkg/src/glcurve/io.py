"""Curve files and CSV formatting."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .curve_engine import GLCurve


class CurveFileError(ValueError):
    """Malformed or inconsistent curve file."""


@dataclass(frozen=True)
class CurveFile:
    degree: int
    dimension: int
    control_points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.control_points, dtype=float)
        if pts.shape != (self.degree + 1, self.dimension):
            raise CurveFileError(
                f"expected {self.degree + 1} control points of dimension "
                f"{self.dimension}, got array of shape {pts.shape}"
            )
        if self.degree < 1 or self.dimension < 1:
            raise CurveFileError("degree and dimension must be positive")
        if not np.all(np.isfinite(pts)):
            raise CurveFileError("control points must be finite")
        object.__setattr__(self, "control_points", pts)

    @classmethod
    def from_curve(cls, curve: GLCurve) -> "CurveFile":
        return cls(curve.n, curve.d, curve.W)

    def to_curve(self) -> GLCurve:
        return GLCurve(self.control_points)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "control_points": self.control_points.tolist(),
        }


def read_curve_file(path) -> CurveFile:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CurveFileError(f"cannot read curve file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise CurveFileError("curve file must hold a JSON object")
    missing = {"degree", "dimension", "control_points"} - data.keys()
    if missing:
        raise CurveFileError(f"curve file lacks keys: {sorted(missing)}")
    try:
        degree, dimension = int(data["degree"]), int(data["dimension"])
        pts = np.array(data["control_points"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise CurveFileError(f"bad curve file contents: {exc}") from exc
    return CurveFile(degree, dimension, pts)


def write_curve_file(path, curve: GLCurve) -> None:
    Path(path).write_text(json.dumps(CurveFile.from_curve(curve).to_dict(), indent=1) + "\n")


def fmt(x) -> str:
    """17 significant digits, locale independent."""
    return format(float(x), ".17g")
