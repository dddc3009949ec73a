"""Zonal harmonics Z_k(x,y) on the ball, extended by k-homogeneity in each
variable from their sphere values.

Normalization: Z_k(zeta, zeta) = dim H_k(R^n), equivalently the full series
sums to the Poisson kernel,

    sum_k Z_k(x, zeta) = (1 - |x|^2) / |x - zeta|^n   (|zeta| = 1),

which pins the convention against a closed form.  On the sphere

    Z_k(zeta, eta) = ((lam + k)/lam) C_k^(lam)(zeta.eta),   lam = (n-2)/2,

with the Chebyshev limit Z_k = 2 cos(k theta) for k >= 1 when n = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ZonalGrid, as_vector, zonal_rule
from .specfun import harmonic_dim_sequence


def zonal_angular_matrix(n: int, k_max: int, t: np.ndarray) -> np.ndarray:
    """Sphere values Z_k(zeta, eta) for zeta.eta = t, rows k = 0..k_max.

    Iterative three-term recurrences, no recursion.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty((k_max + 1, t.size))
    out[0] = 1.0
    if k_max == 0:
        return out
    if n == 2:
        # 2 T_k(t): seed the recurrence with 2 T_0 = 2, but Z_0 = 1
        prev = np.full_like(t, 2.0)
        cur = 2.0 * t
        out[1] = cur
        for k in range(2, k_max + 1):
            prev, cur = cur, 2.0 * t * cur - prev
            out[k] = cur
        return out
    lam = (n - 2) / 2.0
    prev = np.ones_like(t)          # C_0
    cur = 2.0 * lam * t             # C_1
    out[1] = (lam + 1.0) / lam * cur
    for k in range(2, k_max + 1):
        prev, cur = cur, (2.0 * t * (k - 1 + lam) * cur - (k - 2 + 2 * lam) * prev) / k
        out[k] = (lam + k) / lam * cur
    return out


@dataclass(frozen=True)
class ZonalEvaluator:
    """Evaluator of Z_0..Z_k_max for a fixed dimension.

    ``normalization`` records the convention: Z_k(zeta,zeta) equals the
    dimension of the degree-k spherical harmonics space.
    """

    n: int
    k_max: int
    normalization: str = "poisson-sum"

    def angular(self, t) -> np.ndarray:
        """Matrix of sphere values, rows k = 0..k_max, columns over t."""
        return zonal_angular_matrix(self.n, self.k_max, t)

    def diagonal(self) -> np.ndarray:
        """Z_k(zeta, zeta) = dim H_k for k = 0..k_max."""
        return harmonic_dim_sequence(self.n, self.k_max)


def zonal(k: int, x, y) -> float:
    """Z_k(x, y) = |x|^k |y|^k Z_k(x/|x|, y/|y|); zero vectors give 1 at k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    xv, yv = as_vector(x), as_vector(y)
    if xv.shape != yv.shape:
        raise ValueError("dimension mismatch")
    n = xv.size
    rx = float(np.linalg.norm(xv))
    ry = float(np.linalg.norm(yv))
    if k == 0:
        return 1.0
    if rx == 0.0 or ry == 0.0:
        return 0.0
    t = float(np.clip(xv @ yv / (rx * ry), -1.0, 1.0))
    ang = zonal_angular_matrix(n, k, np.array([t]))[k, 0]
    return float((rx * ry) ** k * ang)


def zonal_tail_bound(n: int, rho: float, k_max: int) -> float:
    """Certified bound on sum_(k > k_max) dim H_k * rho^k for rho < 1."""
    if not 0.0 <= rho < 1.0:
        raise ValueError("rho must lie in [0, 1)")
    if rho == 0.0:
        return 0.0
    # accumulate exact terms until they are negligible, then close with a
    # geometric remainder using the (decreasing) term ratio
    total = 0.0
    k = k_max + 1
    term = float(harmonic_dim_sequence(n, k)[-1]) * rho**k
    while True:
        total += term
        if n == 2:
            ratio = rho
        else:
            ratio = rho * (2 * k + n) / (2 * k + n - 2) * (n - 2 + k) / (k + 1)
        if term < 1e-30 or k > k_max + 200000:
            if ratio < 1.0:
                total += term * ratio / (1.0 - ratio)
            else:
                raise RuntimeError("tail bound failed to close")
            return total
        k += 1
        term *= ratio


def zonal_sum_poisson_check(x, zeta, k_max: int, tol: float = 1e-8) -> float:
    """Partial sum sum_(k <= k_max) Z_k(x, zeta) with |zeta| = 1.

    Raises when the certified tail bound at |x| exceeds tol; the sum then
    matches the closed-form Poisson kernel within tol.
    """
    xv = as_vector(x)
    zv = as_vector(zeta)
    n = xv.size
    r = float(np.linalg.norm(xv))
    if r > 0.9:
        raise ValueError("poisson check restricted to |x| <= 0.9")
    tail = zonal_tail_bound(n, r, k_max)
    if tail > tol:
        raise ValueError(
            f"k_max = {k_max} too small: tail bound {tail:.3e} > tol {tol:.3e} at |x| = {r}"
        )
    if r == 0.0:
        return 1.0
    t = float(np.clip(xv @ zv / r, -1.0, 1.0))
    ang = zonal_angular_matrix(n, k_max, np.array([t]))[:, 0]
    powers = r ** np.arange(k_max + 1)
    return float(ang @ powers)


def sphere_mode_projection(n: int, g, m: int, points: int = 128, grid: ZonalGrid | None = None) -> float:
    """<g, Z_m(., e_1)> over the sphere for a zonal g given as g(theta).

    Orthogonality of degrees makes this vanish whenever g has no degree-m
    component; on g = Z_k(., e_1) it reproduces dim H_k at k = m.
    """
    zg = grid if grid is not None else zonal_rule(n, points)
    ang = zonal_angular_matrix(n, m, zg.cos_theta)[m]
    return float(zg.weights @ (g(zg.theta) * ang))
