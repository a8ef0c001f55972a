"""Gauss-Legendre basis polynomials F^n_0..F^n_n in three representations.

* power     -- shifted power basis ``(t+1)^k``
* legendre  -- Legendre basis ``P_k(t)``
* jacobi1   -- ``boundary(t) + (t^2-1)/2 * sum_k g_k P^(1)_k(t)``

Every representation is built from the zeros of ``P_n`` in O(n^2) and is
immutable once constructed.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .ortho_core import (
    LegendreRootTable,
    clenshaw,
    jacobi_table,
    legendre_at_zero,
    legendre_roots,
    pochhammer,
)


class Kind(str, enum.Enum):
    POWER = "power"
    LEGENDRE = "legendre"
    JACOBI1 = "jacobi1"


#: degree above which the shifted power form loses accuracy
POWER_STABLE_DEGREE = 20


class PowerBasisWarning(RuntimeWarning):
    """The shifted power representation is ill-conditioned at this degree."""


def _frozen(a):
    a = np.asarray(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class AuxPowerTables:
    n: int
    a: np.ndarray  # a_0..a_n
    b: np.ndarray  # b[i-1, k] = b^(i)_k, i in 1..n, k in 0..n-1
    pleg: np.ndarray  # pleg[i-1] = P_{n-1}(tau_i)


@dataclass(frozen=True)
class PowerBasisRep:
    """``F^n_i(t) = coeffs[i, 0] + sum_{k>=1} coeffs[i, k] (t+1)^k``.

    Column 0 holds the standalone constant (1 for ``F^n_0``, 0 otherwise).
    """

    n: int
    coeffs: np.ndarray
    aux: AuxPowerTables
    overflow: bool = False

    kind = Kind.POWER

    @property
    def const_term(self):
        return self.coeffs[:, 0]

    @property
    def c(self):
        """``c[i, k-1] = c^(i)_k`` for ``k = 1..n``."""
        return self.coeffs[:, 1:]

    @property
    def ill_conditioned(self) -> bool:
        return self.overflow or self.n > POWER_STABLE_DEGREE


@dataclass(frozen=True)
class OrthoBasisRep:
    """Legendre or bracketed ``P^(1)`` expansion of every ``F^n_i``.

    legendre: ``F^n_i(t) = offset[i] + sum_{k=0}^{n} coeff[i, k] P_k(t)``,
    with ``offset = 1/2`` for ``i in {0, n}`` and 0 otherwise.

    jacobi1: ``F^n_i(t) = boundary_i(t) + (t^2-1)/2 sum_{k=0}^{n-2} coeff[i, k] P^(1)_k(t)``
    with ``boundary_0 = (1-t)/2``, ``boundary_n = (1+t)/2``.
    """

    n: int
    kind: Kind
    coeff: np.ndarray
    offset: np.ndarray

    @property
    def alpha(self) -> float:
        return 0.0 if self.kind is Kind.LEGENDRE else 1.0


# ---------------------------------------------------------------------------
# Legendre values at the zeros of P_n


def legendre_at_roots(n: int, roots: LegendreRootTable, kmax: int) -> np.ndarray:
    """Matrix ``V[k, i-1] = P_k(tau_i)`` for ``k = 0..kmax``.

    Only the first ``ceil(n/2)`` columns are computed by recurrence; the rest
    follow from ``tau_{n+1-i} = -tau_i`` and ``P_k(-x) = (-1)^k P_k(x)``.
    The zero root of odd ``n`` uses the closed form of ``P_k(0)``.
    """
    tau = np.asarray(roots.tau, dtype=float)
    half = n // 2
    V = np.empty((kmax + 1, n))
    if half:
        V[:, :half] = np.array(jacobi_table(0.0, kmax, tau[:half]))
    if n % 2:
        V[:, half] = [legendre_at_zero(k) for k in range(kmax + 1)]
    sign = (-1.0) ** np.arange(kmax + 1)
    V[:, n - half:] = sign[:, None] * V[:, :half][:, ::-1]
    return V


def pleg_at_roots(n: int, roots: LegendreRootTable) -> np.ndarray:
    """``P_{n-1}(tau_i)`` for ``i = 1..n`` via half-table and mirroring."""
    tau = np.asarray(roots.tau, dtype=float)
    half = n // 2
    out = np.empty(n)
    for i in range(half):
        out[i] = jacobi_table(0.0, n - 1, tau[i])[-1]
    if n % 2:
        m = (n - 1) // 2
        out[half] = (-1) ** m * math.comb(2 * m, m) / 4.0**m
    out[n - half:] = (-1.0) ** (n - 1) * out[:half][::-1]
    return out


# ---------------------------------------------------------------------------
# shifted power representation


def power_coeffs_a(n: int) -> np.ndarray:
    """Coefficients of ``P_n(x) = sum_k a_k (x+1)^k`` by backward recurrence."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = np.empty(n + 1)
    with np.errstate(over="ignore"):
        # binom(2n, n) / 2^n as a float product, overflowing to inf for huge n
        a[n] = np.prod((n + np.arange(1, n + 1)) / (2.0 * np.arange(1, n + 1)))
        for k in range(n - 1, -1, -1):
            a[k] = -2.0 * (k + 1) ** 2 * a[k + 1] / ((n - k) * (n + k + 1))
    return a


def power_coeffs_b(n: int, roots: LegendreRootTable, a, i: int) -> np.ndarray:
    """``b^(i)_0..b^(i)_{n-1}`` with ``P_n(x)/(x - tau_i) = sum_k b_k (x+1)^k``."""
    if not 1 <= i <= n:
        raise IndexError(f"root index {i} outside 1..{n}")
    shift = float(roots.tau[i - 1]) + 1.0
    b = np.zeros(n + 1)
    for k in range(n, 0, -1):
        b[k - 1] = a[k] + shift * b[k]
    return b[:n]


def _power_b_matrix(n, roots, a):
    shift = np.asarray(roots.tau, dtype=float) + 1.0
    b = np.zeros((n, n + 1))
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(n, 0, -1):
            b[:, k - 1] = a[k] + shift * b[:, k]
    return b[:, :n]


def build_power_rep(n: int, roots: LegendreRootTable | None = None) -> PowerBasisRep:
    """Shifted power coefficients of ``F^n_0..F^n_n``."""
    roots = roots if roots is not None else legendre_roots(n)
    a = power_coeffs_a(n)
    b = _power_b_matrix(n, roots, a)
    pleg = pleg_at_roots(n, roots)
    k = np.arange(1, n + 1)
    with np.errstate(over="ignore", invalid="ignore"):
        # e[i-1, k-1] = n P_{n-1}(tau_i) b^(i)_{k-1} / (2k), the G^n_i coefficients
        e = n * pleg[:, None] * b / (2.0 * k)
        coeffs = np.zeros((n + 1, n + 1))
        coeffs[0, 0] = 1.0
        coeffs[0, 1:] = -e[0]
        coeffs[1:n, 1:] = e[:-1] - e[1:]
        coeffs[n, 1:] = e[-1]
    overflow = not np.all(np.isfinite(coeffs))
    aux = AuxPowerTables(n=n, a=_frozen(a), b=_frozen(b), pleg=_frozen(pleg))
    return PowerBasisRep(n=n, coeffs=_frozen(coeffs), aux=aux, overflow=overflow)


# ---------------------------------------------------------------------------
# orthogonal representations


def build_ortho_rep(n: int, roots: LegendreRootTable | None, kind) -> OrthoBasisRep:
    """Legendre (``kind="legendre"``) or bracketed ``P^(1)`` (``"jacobi1"``) form."""
    kind = Kind(kind)
    if kind is Kind.POWER:
        raise ValueError("use build_power_rep for the power representation")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    roots = roots if roots is not None else legendre_roots(n)
    offset = np.zeros(n + 1)
    if kind is Kind.LEGENDRE:
        V = legendre_at_roots(n, roots, n)
        V[n] = 0.0  # P_n vanishes at its own zeros
        # h[i-1] are the Legendre coefficients of G^n_i (without constant)
        h = np.empty((n, n + 1))
        h[:, 0] = -0.5 * V[1]
        h[:, 1:n] = -0.5 * (V[2:n + 1] - V[0:n - 1]).T
        h[:, n] = 0.5 * V[n - 1]
        offset[0] = offset[n] = 0.5
    else:
        V = legendre_at_roots(n, roots, n - 1)
        k = np.arange(1, n)
        # h[i-1, k-1] = (2k+1)/(2k) P_k(tau_i)
        h = ((2 * k + 1) / (2 * k))[None, :] * V[1:n].T
    coeff = np.empty((n + 1, h.shape[1]))
    coeff[0] = -h[0]
    coeff[1:n] = h[:-1] - h[1:]
    coeff[n] = h[-1]
    return OrthoBasisRep(n=n, kind=kind, coeff=_frozen(coeff), offset=_frozen(offset))


@lru_cache(maxsize=256)
def basis_rep(n: int, kind) -> PowerBasisRep | OrthoBasisRep:
    """Cached representation of degree ``n`` built on :func:`legendre_roots`."""
    kind = Kind(kind)
    if kind is Kind.POWER:
        return build_power_rep(n, legendre_roots(n))
    return build_ortho_rep(n, legendre_roots(n), kind)


# ---------------------------------------------------------------------------
# evaluation


def horner(coeffs, u):
    """``sum_k coeffs[k] u^k``; ``coeffs[k]`` may be arrays broadcasting with ``u``."""
    if len(coeffs) == 1:
        return coeffs[0] + u * 0
    acc = coeffs[-1] * u
    acc += coeffs[-2]
    for c in coeffs[-3::-1]:
        acc *= u
        acc += c
    return acc


def horner_shifted(coeffs, x):
    """``sum_k coeffs[k] (x+1)^k``.

    The first step absorbs the shift as ``c_n x + (c_n + c_{n-1})``, so degree
    one needs no ``x + 1`` array at all.
    """
    if len(coeffs) == 1:
        return coeffs[0] + x * 0
    acc = coeffs[-1] * x
    acc += coeffs[-1] + coeffs[-2]
    if len(coeffs) > 2:
        u = x + 1
        for c in coeffs[-3::-1]:
            acc *= u
            acc += c
    return acc


def _check_index(rep, i):
    if not 0 <= i <= rep.n:
        raise IndexError(f"basis index {i} outside 0..{rep.n}")


def _boundary(n, i, t):
    if i == 0:
        return (1 - t) / 2
    if i == n:
        return (1 + t) / 2
    return t * 0


def eval_basis(rep, i: int, t):
    """Value of ``F^n_i`` at ``t`` (scalar or array)."""
    _check_index(rep, i)
    t = np.asarray(t, dtype=float)
    if rep.kind is Kind.POWER:
        # t > 0 through F_i(t) = F_{n-i}(-t), keeping t+1 in [0, 1]
        u = 1 - np.abs(t)
        return np.where(t > 0, horner(rep.coeffs[rep.n - i], u), horner(rep.coeffs[i], u))
    if rep.kind is Kind.LEGENDRE:
        return rep.offset[i] + clenshaw(rep.coeff[i], t, 0.0)
    s = clenshaw(rep.coeff[i], t, 1.0)
    return _boundary(rep.n, i, t) + (t * t - 1) / 2 * s


def eval_basis_all(rep, t) -> np.ndarray:
    """All ``F^n_0..F^n_n`` at every ``t``; shape ``t.shape + (n+1,)``."""
    t = np.asarray(t, dtype=float)
    x = t[..., None]
    n = rep.n
    if rep.kind is Kind.POWER:
        # evaluate at -|t|; for t > 0 the row order flips by symmetry
        v = horner(rep.coeffs.T, 1 - np.abs(x))
        return np.where(x > 0, v[..., ::-1], v)
    if rep.kind is Kind.LEGENDRE:
        return rep.offset + clenshaw(rep.coeff.T, x, 0.0)
    s = clenshaw(rep.coeff.T, x, 1.0)
    out = (x * x - 1) / 2 * s + np.zeros(n + 1)
    out[..., 0] += (1 - t) / 2
    out[..., n] += (1 + t) / 2
    return out


def _jacobi_series_derivative(coeff, alpha, j, t):
    """j-th derivative of ``sum_k coeff[k] P^(alpha)_k(t)``."""
    if j == 0:
        return clenshaw(coeff, t, alpha)
    m = len(coeff) - 1
    if j > m:
        return t * 0
    ks = np.arange(j, m + 1)
    scale = np.array([pochhammer(k + 2 * alpha + 1, j) for k in ks]) / 2.0**j
    return clenshaw(scale * coeff[j:], t, alpha + j)


def eval_basis_derivative(rep, i: int, m: int, t):
    """m-th derivative of ``F^n_i`` at ``t``."""
    _check_index(rep, i)
    if m < 0:
        raise ValueError("derivative order must be non-negative")
    t = np.asarray(t, dtype=float)
    if m == 0:
        return eval_basis(rep, i, t)
    if rep.kind is Kind.POWER:
        if m > rep.n:
            return t * 0
        # F_i^(m)(t) = (-1)^m F_{n-i}^(m)(-t) for t > 0
        ks = np.arange(m, rep.n + 1)
        falling = np.array([pochhammer(k - m + 1, m) for k in ks])
        u = 1 - np.abs(t)
        lo = horner(falling * rep.coeffs[i, m:], u)
        hi = (-1) ** m * horner(falling * rep.coeffs[rep.n - i, m:], u)
        return np.where(t > 0, hi, lo)
    if rep.kind is Kind.LEGENDRE:
        return _jacobi_series_derivative(rep.coeff[i], 0.0, m, t)
    # Leibniz rule on (t^2-1)/2 * S(t); the bracket has derivatives t and 1
    g = rep.coeff[i]
    out = (t * t - 1) / 2 * _jacobi_series_derivative(g, 1.0, m, t)
    out = out + m * t * _jacobi_series_derivative(g, 1.0, m - 1, t)
    if m >= 2:
        out = out + math.comb(m, 2) * _jacobi_series_derivative(g, 1.0, m - 2, t)
    if m == 1 and i in (0, rep.n):
        out = out + (-0.5 if i == 0 else 0.5)
    return out
