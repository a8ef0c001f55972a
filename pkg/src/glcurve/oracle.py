"""Reference evaluation of GL polynomials.

Two independent routes:

* the integral definition ``G^n_i(t) = n P_{n-1}(tau_i)/2 * int_{-1}^t P_n(x)/(x - tau_i) dx - 1/2``,
  integrated with an n-node Gauss rule (exact for the degree n-1 integrand);
* the bracketed ``P^(1)`` expansion carried out in mpmath with 40 digits
  (:func:`extended_reference`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .gl_basis import Kind, basis_rep, eval_basis_all
from .ortho_core import (
    DomainError,
    jacobi_derivative_eval,
    jacobi_eval,
    jacobi_table,
    legendre_roots,
)

#: distance to a root below which the integrand uses P_n' instead of the ratio
SINGULARITY_GUARD = 1e-8

#: working digits of the extended-precision reference
EXTENDED_DPS = 40


@dataclass(frozen=True)
class QuadratureRule:
    m: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f, lo=-1.0, hi=1.0):
        """Integrate ``f`` over ``[lo, hi]`` with the mapped rule."""
        half = (hi - lo) / 2
        x = half * self.nodes + (hi + lo) / 2
        return half * np.dot(self.weights, f(x))


@lru_cache(maxsize=None)
def gauss_rule(m: int) -> QuadratureRule:
    """m-point Gauss-Legendre rule, ``w_i = 2 / ((1 - x_i^2) P_m'(x_i)^2)``."""
    x = legendre_roots(m).tau
    dp = jacobi_derivative_eval(0.0, m, 1, x)
    w = 2.0 / ((1.0 - x**2) * dp**2)
    return QuadratureRule(m=m, nodes=x, weights=w)


def _check_t(t):
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1) or np.any(np.isnan(t)):
        raise DomainError("parameter t must lie in [-1, 1]")
    return t


def _roots(n, roots):
    return roots if roots is not None else legendre_roots(n)


def g_integral_all(n: int, t, roots=None) -> np.ndarray:
    """``G^n_0..G^n_{n+1}`` at every ``t``; shape ``t.shape + (n+2,)``."""
    t = _check_t(t)
    tau = np.asarray(_roots(n, roots).tau, dtype=float)
    rule = gauss_rule(n)
    pleg = jacobi_eval(0.0, n - 1, tau)
    flat = t.reshape(-1)
    out = np.empty((flat.size, n + 2))
    out[:, 0], out[:, n + 1] = 0.5, -0.5
    # (points, nodes, roots) ratios; chunk to bound memory
    step = max(1, 2_000_000 // (n * n))
    for s in range(0, flat.size, step):
        tc = flat[s:s + step]
        half = (tc + 1) / 2
        x = half[:, None] * rule.nodes + (tc[:, None] - 1) / 2
        p = jacobi_eval(0.0, n, x)
        dp = jacobi_derivative_eval(0.0, n, 1, x)
        diff = x[..., None] - tau
        near = np.abs(diff) < SINGULARITY_GUARD
        ratio = np.divide(p[..., None], diff, out=np.zeros_like(diff), where=~near)
        ratio = np.where(near, dp[..., None], ratio)
        integral = half[:, None] * np.einsum("j,mji->mi", rule.weights, ratio)
        out[s:s + step, 1:n + 1] = n * pleg / 2 * integral - 0.5
    return out.reshape(t.shape + (n + 2,))


def g_integral(n: int, i: int, t, roots=None):
    """``G^n_i(t)`` from its integral definition, ``0 <= i <= n+1``."""
    if not 0 <= i <= n + 1:
        raise IndexError(f"G index {i} outside 0..{n + 1}")
    return g_integral_all(n, t, roots)[..., i]


def f_integral_all(n: int, t, roots=None) -> np.ndarray:
    """``F^n_0..F^n_n`` at every ``t`` as differences of consecutive ``G``."""
    g = g_integral_all(n, t, roots)
    return g[..., :-1] - g[..., 1:]


def f_integral(n: int, i: int, t, roots=None):
    """``F^n_i(t) = G^n_i(t) - G^n_{i+1}(t)``."""
    if not 0 <= i <= n:
        raise IndexError(f"basis index {i} outside 0..{n}")
    return f_integral_all(n, t, roots)[..., i]


# ---------------------------------------------------------------------------
# extended precision


@lru_cache(maxsize=None)
def _extended_coeffs(n: int, dps: int):
    """Bracketed P^(1) coefficient rows of every F^n_i, as mpf lists."""
    tau = legendre_roots(n, dps=dps).tau
    with mpmath.workdps(dps):
        zero = mpmath.mpf(0)
        h = []
        for x in tau:
            p = jacobi_table(zero, n - 1, x)
            h.append([mpmath.mpf(2 * k + 1) / (2 * k) * p[k] for k in range(1, n)])
        rows = [[-v for v in h[0]]]
        rows += [[u - v for u, v in zip(h[i], h[i + 1])] for i in range(n - 1)]
        rows.append(list(h[-1]))
    return rows


def extended_basis_all(n: int, t, dps: int = EXTENDED_DPS) -> list:
    """All ``F^n_0(t)..F^n_n(t)`` as mpf values (computed at ``dps`` digits)."""
    rows = _extended_coeffs(n, dps)
    with mpmath.workdps(dps):
        x = mpmath.mpf(t)
        p1 = jacobi_table(mpmath.mpf(1), n - 2, x) if n >= 2 else []
        bracket = (x * x - 1) / 2
        vals = [bracket * mpmath.fdot(r, p1) if p1 else 0 * x for r in rows]
        vals[0] += (1 - x) / 2
        vals[n] += (1 + x) / 2
    return vals


def extended_reference(n: int, i: int, t, dps: int = EXTENDED_DPS) -> float:
    """``F^n_i(t)`` computed with ``dps`` significant digits, rounded to float."""
    if not 0 <= i <= n:
        raise IndexError(f"basis index {i} outside 0..{n}")
    _check_t(t)
    return float(extended_basis_all(n, t, dps)[i])


@lru_cache(maxsize=64)
def extended_matrix(n: int, ts: tuple, dps: int = EXTENDED_DPS) -> np.ndarray:
    """Float matrix of extended reference values, rows follow ``ts``."""
    out = np.array([[float(v) for v in extended_basis_all(n, t, dps)] for t in ts])
    out.flags.writeable = False
    return out


# ---------------------------------------------------------------------------
# error reports


@dataclass(frozen=True)
class ErrorReport:
    n: int
    kind: str
    max_abs_error: float
    mean_abs_error: float
    sample_count: int
    t_grid: str


def error_report(n: int, kind, grid_size: int) -> ErrorReport:
    """Deviation of the float64 basis from the extended reference on a uniform grid."""
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    kind = Kind(kind)
    ts = np.linspace(-1.0, 1.0, grid_size)
    ref = extended_matrix(n, tuple(ts.tolist()))
    with np.errstate(all="ignore"):
        err = np.abs(eval_basis_all(basis_rep(n, kind), ts) - ref)
    err = np.where(np.isfinite(err), err, np.inf)
    return ErrorReport(
        n=n,
        kind=kind.value,
        max_abs_error=float(err.max()),
        mean_abs_error=float(err.mean()),
        sample_count=int(err.size),
        t_grid=f"uniform[-1,1] x {grid_size}",
    )
