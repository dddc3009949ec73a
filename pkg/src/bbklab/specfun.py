"""Scalar special functions: Pochhammer symbols, the kernel coefficients
gamma_k(alpha), and ultraspherical (Gegenbauer) polynomials.

The coefficient gamma_k(alpha) has two branches:

    gamma_k(alpha) = (1 + n/2 + alpha)_k / (n/2)_k          if alpha > -(1 + n/2)
    gamma_k(alpha) = (k!)^2 / ((1 - (n/2 + alpha))_k (n/2)_k)  otherwise

Both are ratios of rising products with strictly positive factors, so
gamma_k(alpha) > 0 for every k >= 0 and every real alpha, and
gamma_k(alpha) ~ k^(1+alpha) as k -> infinity.  All integer-order Pochhammer
evaluations use rising products, never Gamma ratios, and long products are
accumulated in log space.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, gammasgn


def _is_nonneg_int(b) -> bool:
    return float(b) >= 0 and float(b) == int(b)


def pochhammer(a: float, b: float) -> float:
    """(a)_b = Gamma(a+b)/Gamma(a).

    For integer b >= 0 this is the rising product a (a+1) ... (a+b-1),
    computed as such.  Otherwise a and a+b must avoid the poles of Gamma.
    """
    a = float(a)
    if _is_nonneg_int(b):
        k = int(b)
        out = 1.0
        for j in range(k):
            out *= a + j
        return out
    b = float(b)
    for arg, name in ((a, "a"), (a + b, "a+b")):
        if arg <= 0 and arg == int(arg):
            raise ValueError(f"pochhammer pole: {name} = {arg} is a nonpositive integer")
    sign = gammasgn(a + b) * gammasgn(a)
    return float(sign * np.exp(gammaln(a + b) - gammaln(a)))


def _gamma_k_log_terms(n: int, alpha: float, k_max: int) -> np.ndarray:
    """log(gamma_k(alpha) / gamma_{k-1}(alpha)) for k = 1..k_max."""
    j = np.arange(k_max, dtype=float)  # factor index of the rising products
    half_n = n / 2.0
    if alpha > -(1.0 + half_n):
        return np.log(1.0 + half_n + alpha + j) - np.log(half_n + j)
    u = 1.0 - (half_n + alpha)
    return 2.0 * np.log(j + 1.0) - np.log(u + j) - np.log(half_n + j)


@lru_cache(maxsize=128)
def _log_gamma_k_sequence(n: int, alpha: float, k_max: int) -> np.ndarray:
    out = np.empty(k_max + 1)
    out[0] = 0.0  # gamma_0 = 1 on both branches
    if k_max > 0:
        out[1:] = np.cumsum(_gamma_k_log_terms(n, alpha, k_max))
    out.flags.writeable = False
    return out


def log_gamma_k_sequence(n: int, alpha, k_max: int) -> np.ndarray:
    """log gamma_k(alpha) for k = 0..k_max (read-only, cached)."""
    if n < 2 or k_max < 0:
        raise ValueError("need n >= 2 and k_max >= 0")
    return _log_gamma_k_sequence(n, float(alpha), k_max)


def gamma_k_sequence(n: int, alpha, k_max: int) -> np.ndarray:
    return np.exp(log_gamma_k_sequence(n, alpha, k_max))


def gamma_k(n: int, alpha, k: int) -> float:
    """The coefficient gamma_k(alpha), branch selected on alpha vs -(1+n/2)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return float(gamma_k_sequence(n, alpha, k)[k])


def gamma_k_asymptotic_check(n: int, alpha: float, k_max: int) -> float:
    """Least-squares slope of log gamma_k against log k over k in [k_max/2, k_max].

    The slope approaches 1 + alpha.
    """
    if k_max < 64:
        raise ValueError("k_max must be >= 64")
    logs = log_gamma_k_sequence(n, alpha, k_max)
    k = np.arange(k_max // 2, k_max + 1)
    slope = np.polyfit(np.log(k), logs[k], 1)[0]
    return float(slope)


def gegenbauer(lam: float, k: int, t) -> float | np.ndarray:
    """Ultraspherical polynomial C_k^(lam)(t) by the three-term recurrence.

    Needs lam > -1/2.  At lam = 0 the renormalized Chebyshev limit is used:
    lim_(lam->0) C_k^(lam)/lam = (2/k) T_k for k >= 1 (the n = 2 case).
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < -1.0) or np.any(t > 1.0):
        raise ValueError("t must lie in [-1, 1]")
    if lam <= -0.5:
        raise ValueError("lambda must be > -1/2")
    if k == 0:
        out = np.ones_like(t)
        return float(out) if out.ndim == 0 else out
    if lam == 0.0:
        out = (2.0 / k) * np.cos(k * np.arccos(np.clip(t, -1.0, 1.0)))
        return float(out) if out.ndim == 0 else out
    prev = np.ones_like(t)
    cur = 2.0 * lam * t
    for m in range(2, k + 1):
        prev, cur = cur, (2.0 * t * (m - 1 + lam) * cur - (m - 2 + 2 * lam) * prev) / m
    return float(cur) if cur.ndim == 0 else cur


def harmonic_dim(n: int, k: int) -> int:
    """Dimension of the space of spherical harmonics of degree k on R^n."""
    if k == 0:
        return 1
    if n == 2:
        return 2
    # (2k+n-2)/(n-2) * (n-2)_k / k!
    num = 2 * k + n - 2
    prod = 1
    for j in range(k):
        prod *= n - 2 + j
    return num * prod // ((n - 2) * math.factorial(k))


def harmonic_dim_sequence(n: int, k_max: int) -> np.ndarray:
    """dim H_k for k = 0..k_max as floats."""
    if n == 2:
        out = np.full(k_max + 1, 2.0)
        out[0] = 1.0
        return out
    j = np.arange(k_max, dtype=float)
    log_ratio = np.log(n - 2 + j) - np.log(j + 1.0)
    log_prod = np.concatenate(([0.0], np.cumsum(log_ratio)))
    k = np.arange(k_max + 1, dtype=float)
    return (2.0 * k + n - 2) / (n - 2) * np.exp(log_prod)
