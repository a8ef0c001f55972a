"""GL curves: single-point and preprocessed multipoint evaluation."""
from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gl_basis import (
    Kind,
    PowerBasisWarning,
    basis_rep,
    eval_basis_all,
    horner,
    horner_shifted,
)
from .ortho_core import DomainError, clenshaw, recurrence_tables
from .oracle import f_integral_all


@dataclass(frozen=True)
class GLCurve:
    """Control points ``W_0..W_n`` stored as an ``(n+1, d)`` array."""

    W: np.ndarray

    def __post_init__(self):
        W = np.array(self.W, dtype=float)
        if W.ndim == 1:
            W = W[:, None]
        if W.ndim != 2 or W.shape[0] < 2 or W.shape[1] < 1:
            raise ValueError("control points must form an (n+1, d) array with n >= 1")
        if not np.all(np.isfinite(W)):
            raise ValueError("control points must be finite")
        W.flags.writeable = False
        object.__setattr__(self, "W", W)

    @property
    def n(self) -> int:
        return self.W.shape[0] - 1

    @property
    def d(self) -> int:
        return self.W.shape[1]

    def transformed(self, A, b=0.0) -> "GLCurve":
        """Image under the affine map ``x -> A x + b``."""
        return GLCurve(self.W @ np.asarray(A, dtype=float).T + b)


def random_curve(n: int, d: int = 2, rng=None) -> GLCurve:
    """Control points drawn uniformly from ``[-1, 1]^d``."""
    rng = np.random.default_rng(rng)
    return GLCurve(rng.uniform(-1.0, 1.0, size=(n + 1, d)))


def check_params(ts) -> np.ndarray:
    ts = np.asarray(ts, dtype=float)
    if np.any(np.isnan(ts)) or np.any(np.abs(ts) > 1):
        raise DomainError("evaluation parameters must lie in [-1, 1]")
    return ts


# ---------------------------------------------------------------------------
# single point


def eval_point(curve: GLCurve, t: float, kind=Kind.JACOBI1) -> np.ndarray:
    """``sum_i W_i F^n_i(t)`` in O(n^2 + dn).

    Only ``F^n_0..F^n_{n//2}`` are evaluated, at ``t`` and ``-t``; the upper
    half of the sum uses ``F^n_i(t) = F^n_{n-i}(-t)``.  The power form instead
    evaluates all rows at ``-|t|``, which is better conditioned.
    """
    t = float(check_params(t))
    if t == -1.0:
        return curve.W[0].copy()
    if t == 1.0:
        return curve.W[-1].copy()
    kind = Kind(kind)
    n, W = curve.n, curve.W
    h = n // 2
    rep = basis_rep(n, kind)
    if kind is Kind.POWER:
        # every row at -|t|, so the shifted variable stays in [0, 1]
        vals = horner(rep.coeffs.T, 1 - abs(t))
        return (vals[::-1] if t > 0 else vals) @ W
    x = np.array([t, -t])[:, None]
    if kind is Kind.LEGENDRE:
        vals = rep.offset[:h + 1] + clenshaw(rep.coeff[:h + 1].T, x, 0.0)
    else:
        s = clenshaw(rep.coeff[:h + 1].T, x, 1.0)
        vals = (x * x - 1) / 2 * s + np.zeros(h + 1)
        vals[:, 0] += (1 - x[:, 0]) / 2
    plus, minus = vals
    out = plus @ W[:h + 1]
    upper = np.arange(h + 1, n + 1)
    if upper.size:
        out = out + minus[n - upper] @ W[upper]
    return out


# ---------------------------------------------------------------------------
# multipoint


@dataclass(frozen=True)
class PreparedCurve:
    """t-independent collapsed coefficients of a curve.

    power:    ``p(t) = sum_k collapsed[k] (t+1)^k``
    legendre: ``p(t) = sum_k collapsed[k] P_k(t)``
    jacobi1:  ``p(t) = (1-t)/2 w_0 + (1+t)/2 w_n + (t^2-1)/2 sum_k collapsed[k] P^(1)_k(t)``
    """

    n: int
    d: int
    kind: Kind
    collapsed: np.ndarray
    w_first: np.ndarray
    w_last: np.ndarray
    tables: tuple | None = None


def _fold(coeff, W, symmetric):
    """``sum_i W_i coeff[i]`` for every column, using only the first half of rows."""
    n = W.shape[0] - 1
    if not symmetric:
        return coeff.T @ W
    h = n // 2
    lower = coeff[:h + 1].T @ W[:h + 1]
    # rows n-i for i > h are the mirrored lower rows, sign (-1)^k per column
    mirrored = coeff[:n - h].T @ W[:h:-1]
    sign = (-1.0) ** np.arange(coeff.shape[1])
    return lower + sign[:, None] * mirrored


def prepare(curve: GLCurve, kind=Kind.JACOBI1, symmetric: bool = True) -> PreparedCurve:
    """Collapse control points against the basis coefficients in O(dn^2).

    ``symmetric=False`` uses every basis row directly (debug/differential mode).
    The power form has no sign-only mirror in ``(t+1)^k``, so it always
    collapses the full coefficient table.
    """
    kind = Kind(kind)
    n, W = curve.n, curve.W
    rep = basis_rep(n, kind)
    tables = None
    if kind is Kind.POWER:
        if rep.ill_conditioned:
            warnings.warn(
                f"shifted power form of degree {n} is ill-conditioned",
                PowerBasisWarning,
                stacklevel=2,
            )
        with np.errstate(all="ignore"):
            collapsed = rep.coeffs.T @ W
    elif kind is Kind.LEGENDRE:
        collapsed = _fold(rep.coeff, W, symmetric)
        collapsed[0] += 0.5 * (W[0] + W[n])
        tables = recurrence_tables(0.0, n)
    else:
        collapsed = _fold(rep.coeff, W, symmetric) if n >= 2 else np.zeros((0, curve.d))
        tables = recurrence_tables(1.0, max(n - 2, 0))
    collapsed.flags.writeable = False
    return PreparedCurve(
        n=n,
        d=curve.d,
        kind=kind,
        collapsed=collapsed,
        w_first=W[0].copy(),
        w_last=W[n].copy(),
        tables=tables,
    )


def _eval_chunk(prep: PreparedCurve, t: np.ndarray) -> np.ndarray:
    x = t[:, None]
    if prep.kind is Kind.POWER:
        return horner_shifted(prep.collapsed, x)
    if prep.kind is Kind.LEGENDRE:
        return clenshaw(prep.collapsed, x, 0.0, prep.tables)
    # (1-t)/2 w_0 + (1+t)/2 w_n
    out = x * ((prep.w_last - prep.w_first) / 2) + (prep.w_last + prep.w_first) / 2
    if prep.n >= 2:
        out += (x * x - 1) / 2 * clenshaw(prep.collapsed, x, 1.0, prep.tables)
    return out


def eval_many(prep: PreparedCurve, ts, workers: int | None = None) -> np.ndarray:
    """Evaluate at every parameter in ``ts``; returns ``(len(ts), d)``.

    Output rows follow input order.  With ``workers > 1`` the parameters are
    split into contiguous chunks evaluated in threads; every point is computed
    by the same elementwise operations, so results match the sequential run
    bitwise.
    """
    ts = check_params(np.atleast_1d(ts)).reshape(-1)
    if not workers or workers <= 1 or ts.size < 2 * workers:
        with np.errstate(all="ignore"):
            return _eval_chunk(prep, ts)
    chunks = np.array_split(ts, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool, np.errstate(all="ignore"):
        parts = list(pool.map(lambda c: _eval_chunk(prep, c), chunks))
    return np.concatenate(parts, axis=0)


def eval_direct(curve: GLCurve, ts, kind=Kind.JACOBI1) -> np.ndarray:
    """Evaluate through the full basis matrix, no collapsing (O(M n^2))."""
    ts = check_params(np.atleast_1d(ts)).reshape(-1)
    return eval_basis_all(basis_rep(curve.n, kind), ts) @ curve.W


def eval_integral(curve: GLCurve, ts) -> np.ndarray:
    """Evaluate from the integral definition of the basis (reference method)."""
    ts = check_params(np.atleast_1d(ts)).reshape(-1)
    return f_integral_all(curve.n, ts) @ curve.W
