"""Symmetric Jacobi (Gegenbauer) polynomial machinery.

All routines use plain arithmetic on their arguments, so they accept Python
floats, numpy arrays (evaluated elementwise) or ``mpmath.mpf`` values.  Passing
``alpha`` and ``x`` as ``mpf`` runs the whole computation in extended precision;
this is how :mod:`glcurve.oracle` obtains its reference values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

__all__ = [
    "DomainError",
    "JacobiSeries",
    "LegendreRootTable",
    "check_alpha",
    "christoffel_darboux_residual",
    "clenshaw",
    "clenshaw_eval",
    "jacobi_derivative_eval",
    "jacobi_eval",
    "jacobi_table",
    "legendre_at_zero",
    "legendre_roots",
    "pochhammer",
    "recurrence_coeffs",
    "recurrence_tables",
]


class DomainError(ValueError):
    """Argument outside the domain where the operation is defined."""


def check_alpha(alpha):
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha!r}")
    return alpha


def recurrence_coeffs(alpha, k: int):
    """Return ``(xi1(k), xi2(k))`` of the three-term recurrence.

    ``xi2`` is only meaningful for ``k >= 2``; for ``k == 1`` it is returned
    as zero.
    """
    if k < 1:
        raise DomainError(f"recurrence index must be >= 1, got {k}")
    check_alpha(alpha)
    den = k * (k + 2 * alpha)
    xi1 = (k + alpha) * (2 * k + 2 * alpha - 1) / den
    if k == 1:
        return xi1, 0 * xi1
    xi2 = (k + alpha - 1) * (k + alpha) / den
    return xi1, xi2


def recurrence_tables(alpha, m: int):
    """Tabulate ``xi1(k+1)`` and ``xi2(k+2)`` for ``k = 0..m``.

    These are exactly the factors consumed by the Clenshaw step at index k.
    Returned as read-only float arrays when ``alpha`` is a float, lists otherwise.
    """
    if isinstance(alpha, (int, float, np.floating)):
        return _float_tables(float(alpha), m)
    xi1 = [recurrence_coeffs(alpha, k + 1)[0] for k in range(m + 1)]
    xi2 = [recurrence_coeffs(alpha, k + 2)[1] for k in range(m + 1)]
    return xi1, xi2


@lru_cache(maxsize=512)
def _float_tables(alpha: float, m: int):
    xi1 = np.array([recurrence_coeffs(alpha, k + 1)[0] for k in range(m + 1)])
    xi2 = np.array([recurrence_coeffs(alpha, k + 2)[1] for k in range(m + 1)])
    xi1.flags.writeable = False
    xi2.flags.writeable = False
    return xi1, xi2


def jacobi_eval(alpha, k: int, x):
    """Evaluate ``P_k^(alpha)(x)`` by the forward three-term recurrence.

    Negative ``k`` yields zero, so derivative formulas compose without
    special cases.
    """
    check_alpha(alpha)
    if k < 0:
        return x * 0
    p_prev = x * 0 + 1
    if k == 0:
        return p_prev
    p = (alpha + 1) * x
    for j in range(2, k + 1):
        xi1, xi2 = recurrence_coeffs(alpha, j)
        p_prev, p = p, x * xi1 * p - xi2 * p_prev
    return p


def jacobi_table(alpha, m: int, x):
    """Return ``[P_0(x), ..., P_m(x)]`` from a single recurrence sweep."""
    check_alpha(alpha)
    out = [x * 0 + 1]
    if m >= 1:
        out.append((alpha + 1) * x)
    for j in range(2, m + 1):
        xi1, xi2 = recurrence_coeffs(alpha, j)
        out.append(x * xi1 * out[-1] - xi2 * out[-2])
    return out


@dataclass(frozen=True)
class JacobiSeries:
    """A polynomial ``sum_k coeffs[k] * P_k^(alpha)``."""

    alpha: float
    coeffs: tuple

    def __post_init__(self):
        check_alpha(self.alpha)
        if len(self.coeffs) == 0:
            raise ValueError("a Jacobi series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def clenshaw(coeffs, x, alpha=0.0, tables=None):
    """Clenshaw summation of ``sum_k coeffs[k] P_k^(alpha)(x)``.

    ``coeffs`` is indexed along its first axis; each ``coeffs[k]`` may be a
    scalar or an array broadcasting against ``x`` (this is how several series,
    or all coordinates of a curve, are summed in one sweep).  ``tables`` may
    hold precomputed ``recurrence_tables(alpha, m)``.
    """
    m = len(coeffs) - 1
    if m < 0:
        return x * 0
    xi1, xi2 = tables if tables is not None else recurrence_tables(alpha, m)
    b1 = coeffs[m] + x * 0
    if m == 0:
        return b1
    b2 = b1 * 0
    for k in range(m - 1, -1, -1):
        b1, b2 = coeffs[k] + (x * xi1[k]) * b1 - xi2[k] * b2, b1
    return b1


def clenshaw_eval(series: JacobiSeries, x):
    """Evaluate a :class:`JacobiSeries` at ``x``."""
    return clenshaw(series.coeffs, x, series.alpha)


def pochhammer(a, i: int):
    """Rising factorial ``a (a+1) ... (a+i-1)``; ``1`` for ``i == 0``."""
    if i < 0:
        raise ValueError("pochhammer index must be non-negative")
    out = a * 0 + 1
    for j in range(i):
        out = out * (a + j)
    return out


def jacobi_derivative_eval(alpha, k: int, i: int, x):
    """i-th derivative of ``P_k^(alpha)`` at ``x``.

    Uses ``d^i/dx^i P_k^(a) = (k+2a+1)_i / 2^i * P_{k-i}^(a+i)``.
    """
    if i < 0:
        raise ValueError("derivative order must be non-negative")
    if i == 0:
        return jacobi_eval(alpha, k, x)
    if i > k:
        return x * 0
    scale = pochhammer(k + 2 * alpha + 1, i) / 2**i
    return scale * jacobi_eval(alpha + i, k - i, x)


def legendre_at_zero(k: int) -> float:
    """Closed form of ``P_k(0)``."""
    if k % 2:
        return 0.0
    h = k // 2
    return (-1) ** h * math.comb(k, h) / 2.0**k


def christoffel_darboux_residual(k: int, x, y):
    """``|lhs - rhs|`` of the Christoffel-Darboux identity for Legendre."""
    if x == y:
        raise DomainError("Christoffel-Darboux needs x != y")
    px = jacobi_table(0.0, k + 1, x)
    py = jacobi_table(0.0, k + 1, y)
    lhs = sum((2 * i + 1) * px[i] * py[i] for i in range(k + 1))
    rhs = (k + 1) * (py[k] * px[k + 1] - px[k] * py[k + 1]) / (x - y)
    return abs(lhs - rhs)


@dataclass(frozen=True)
class LegendreRootTable:
    """Zeros ``tau_1 < ... < tau_n`` of ``P_n``.

    ``tau`` is a read-only float64 array, or an object array of ``mpf``
    when built in extended precision.
    """

    n: int
    tau: np.ndarray

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.tau[i]


def _newton_root(n, x, tol, one, max_iter=100):
    """Newton on ``P_n`` from ``x``; scalar or array (all entries iterate together)."""
    settled = False
    zero = 0 * one
    for _ in range(max_iter):
        dx = jacobi_eval(zero, n, x) / jacobi_derivative_eval(zero, n, 1, x)
        x = x - dx
        if settled:
            return x
        # one polishing step after the update becomes negligible
        if np.all(abs(dx) <= tol * np.maximum(abs(x), one)):
            settled = True
    raise RuntimeError(f"Newton iteration for a zero of P_{n} did not converge")


def _round_root(n, x):
    # final Newton correction with P_n evaluated in 40 digits; the corrected
    # value rounds to the float64 nearest the true zero
    if x == 0.0:
        return x
    with mpmath.workdps(40):
        xm = mpmath.mpf(x)
        p_prev, p = mpmath.mpf(1), xm
        for k in range(2, n + 1):
            p_prev, p = p, ((2 * k - 1) * xm * p - (k - 1) * p_prev) / k
        if n == 1:
            p_prev = mpmath.mpf(1)
        # (x^2 - 1) P_n' = n (x P_n - P_{n-1})
        dp = n * (xm * p - p_prev) / (xm * xm - 1)
        return float(xm - p / dp)


def _guesses(n, cos, pi):
    # descending guesses for the zeros in (0, 1)
    return [cos(pi * (4 * i - 1) / (4 * n + 2)) for i in range(1, n // 2 + 1)]


def _assemble(pos, n, zero):
    # pos is descending; return ascending with the mirrored negative half
    mid = [zero] if n % 2 else []
    return [-r for r in pos] + mid + list(pos[::-1])


@lru_cache(maxsize=None)
def legendre_roots(n: int, dps: int | None = None) -> LegendreRootTable:
    """Zeros of the Legendre polynomial ``P_n`` in increasing order.

    Newton iteration from ``cos(pi (4i-1) / (4n+2))`` on the non-negative half,
    mirrored to the negative half; the middle zero of odd ``n`` is exactly 0.
    With ``dps`` set, the iteration runs in mpmath at that many digits.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if dps is None:
        pos = _newton_root(n, np.array(_guesses(n, math.cos, math.pi)), 4 * np.finfo(float).eps, 1.0)
        tau = _assemble([_round_root(n, float(x)) for x in pos], n, 0.0)
    else:
        with mpmath.workdps(dps):
            one = mpmath.mpf(1)
            tol = one / 10 ** (dps - 3)
            pos = [_newton_root(n, x, tol, one) for x in _guesses(n, mpmath.cos, mpmath.pi)]
            tau = _assemble(pos, n, 0 * one)
    arr = np.array(tau, dtype=float if dps is None else object)
    arr.flags.writeable = False
    return LegendreRootTable(n=n, tau=arr)
