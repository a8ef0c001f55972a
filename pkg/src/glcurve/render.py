"""SVG output of a planar GL curve and its control polygon."""
from __future__ import annotations

import numpy as np

from .curve_engine import GLCurve, eval_many, prepare
from .gl_basis import Kind

MARGIN = 0.05


def _points(xy):
    return " ".join(f"{x:.10g},{-y:.10g}" for x, y in xy)


def render_svg(curve: GLCurve, samples: int = 500, kind=Kind.JACOBI1) -> str:
    """SVG text with the control polygon (light) and the sampled curve (dark)."""
    if curve.d != 2:
        raise ValueError(f"rendering needs a planar curve, got dimension {curve.d}")
    if samples < 2:
        raise ValueError("need at least two samples")
    ts = np.linspace(-1.0, 1.0, samples)
    pts = eval_many(prepare(curve, kind), ts)
    both = np.vstack([pts, curve.W])
    lo, hi = both.min(axis=0), both.max(axis=0)
    span = float(max(hi - lo))
    if span == 0.0:
        span = 1e-3 * max(1.0, float(np.abs(lo).max()))
    pad = MARGIN * span
    cx, cy = (lo + hi) / 2
    w = max(hi[0] - lo[0], span * 1e-3) + 2 * pad
    h = max(hi[1] - lo[1], span * 1e-3) + 2 * pad
    # y is flipped so the picture has the usual orientation
    view = f"{cx - w / 2:.10g} {-cy - h / 2:.10g} {w:.10g} {h:.10g}"
    r = span * 0.006
    dots = "\n".join(
        f'  <circle cx="{x:.10g}" cy="{-y:.10g}" r="{r:.4g}" fill="#999999"/>' for x, y in curve.W
    )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}" width="800" '
        f'height="{800 * h / w:.0f}">\n'
        f'  <polyline class="control-polygon" points="{_points(curve.W)}" fill="none" '
        'stroke="#b0b0b0" stroke-width="1" vector-effect="non-scaling-stroke"/>\n'
        f"{dots}\n"
        f'  <polyline class="curve" points="{_points(pts)}" fill="none" '
        'stroke="#202020" stroke-width="2" vector-effect="non-scaling-stroke"/>\n'
        "</svg>\n"
    )
