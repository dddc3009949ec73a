"""Evaluation of the harmonic Bergman-Besov kernel

    R_alpha(x, y) = sum_k gamma_k(alpha) Z_k(x, y)

by truncated series with a certified tail bound, together with numerical
probes of its pointwise domination, diagonal growth, and the radius inside
which it stays above 1/2.

The series depends on (x, y) only through rho = |x| |y| and cos of the angle
between x and y, so grid evaluation reduces to one matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geometry import as_vector, sample_ball
from .growth import BOUNDED, LOGARITHMIC, POWER, GrowthFit, fit_growth, geometric_radius_ladder
from .specfun import harmonic_dim_sequence, log_gamma_k_sequence
from .zonal import zonal_angular_matrix

DEFAULT_RHO_MAX = 0.9025  # |x|, |y| <= 0.95


@lru_cache(maxsize=64)
def _tail_budget_cached(n: int, alpha: float, rho: float, tol: float) -> int:
    if rho == 0.0:
        return 0
    log_rho = np.log(rho)
    k_big = 256
    while True:
        log_gamma = log_gamma_k_sequence(n, alpha, k_big)
        dims = harmonic_dim_sequence(n, k_big)
        k = np.arange(k_big + 1)
        log_terms = log_gamma + np.log(dims) + k * log_rho
        terms = np.exp(log_terms)
        # closing geometric bound valid for every k >= k_big: both the
        # coefficient ratio and the dimension ratio are monotone toward 1
        half = n / 2.0
        if alpha > -(1.0 + half):
            gr = (1.0 + half + alpha + k_big) / (half + k_big)
        else:
            u = 1.0 - (half + alpha)
            gr = (k_big + 1.0) ** 2 / ((u + k_big) * (half + k_big))
        if n == 2:
            dr = 1.0
        else:
            dr = (2 * k_big + n) / (2 * k_big + n - 2) * (n - 2 + k_big) / (k_big + 1)
        q = rho * max(gr, 1.0) * max(dr, 1.0)
        if q < 1.0 and terms[-1] * q / (1.0 - q) < tol * 1e-3:
            remainder = terms[-1] * q / (1.0 - q)
            break
        if k_big > 2_000_000:
            raise RuntimeError("tail budget failed to converge")
        k_big *= 2
    suffix = np.cumsum(terms[::-1])[::-1]  # suffix[k] = sum_(j >= k) terms_j
    tails = np.empty(k_big + 1)
    tails[:-1] = suffix[1:] + remainder
    tails[-1] = remainder
    ok = np.nonzero(tails < tol)[0]
    if ok.size == 0:
        raise RuntimeError("tail budget failed to converge")
    return int(ok[0])


def tail_budget(n: int, alpha, rho: float, tol: float = 1e-8) -> int:
    """Smallest k_max whose certified tail sum_(k > k_max) gamma_k dim_k rho^k < tol."""
    if not 0.0 <= rho < 1.0:
        raise ValueError("rho must lie in [0, 1)")
    return _tail_budget_cached(n, float(alpha), float(rho), float(tol))


@dataclass(frozen=True)
class KernelSpec:
    """Truncation certificate for the kernel series of parameter alpha.

    Whenever |x||y| <= rho_max, the truncated series differs from the full
    one by at most tol.
    """

    n: int
    alpha: float
    k_max: int
    tol: float = 1e-8
    rho_max: float = DEFAULT_RHO_MAX

    @classmethod
    def for_tolerance(
        cls, n: int, alpha, tol: float = 1e-8, rho_max: float = DEFAULT_RHO_MAX
    ) -> "KernelSpec":
        return cls(
            n=n,
            alpha=float(alpha),
            k_max=tail_budget(n, alpha, rho_max, tol),
            tol=tol,
            rho_max=rho_max,
        )


def series_matrix(spec: KernelSpec, rho: np.ndarray, cos_angle: np.ndarray) -> np.ndarray:
    """R_alpha values on the product grid rho x cos_angle.

    rho[i] is the product of the two norms and cos_angle[j] the cosine of
    the angle between the two points; returns a (len(rho), len(cos)) array.
    """
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    if np.any(rho > spec.rho_max + 1e-15):
        raise ValueError(f"|x||y| = {rho.max()} exceeds rho_max = {spec.rho_max}")
    k = np.arange(spec.k_max + 1)
    log_gamma = log_gamma_k_sequence(spec.n, spec.alpha, spec.k_max)
    zero = rho == 0.0
    log_rho = np.where(zero, 0.0, np.log(np.maximum(rho, 1e-300)))
    radial = np.exp(log_gamma[None, :] + k[None, :] * log_rho[:, None])
    if np.any(zero):
        radial[zero, :] = 0.0
        radial[zero, 0] = 1.0
    angular = zonal_angular_matrix(spec.n, spec.k_max, np.atleast_1d(cos_angle))
    return radial @ angular


def kernel_eval(spec: KernelSpec, x, y) -> float:
    """Truncated series value of R_alpha(x, y); requires |x||y| <= rho_max."""
    xv, yv = as_vector(x), as_vector(y)
    if xv.shape != yv.shape:
        raise ValueError("dimension mismatch")
    rx = float(np.linalg.norm(xv))
    ry = float(np.linalg.norm(yv))
    rho = rx * ry
    if rho == 0.0:
        return 1.0
    t = float(np.clip(xv @ yv / rho, -1.0, 1.0))
    return float(series_matrix(spec, np.array([rho]), np.array([t]))[0, 0])


# ---------------------------------------------------------------------------
# Dominating comparison kernels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominatingKernel:
    """The comparison kernel: 1, 1 + log(1/[x,y]), or [x,y]^-(n+a).

    Branch selected by a against -n; these dominate |R_a| up to a constant
    and are pointwise monotone in a up to constants.
    """

    n: int
    a: float
    branch: str

    @classmethod
    def create(cls, n: int, a: float) -> "DominatingKernel":
        if a < -n:
            branch = BOUNDED
        elif a == -n:
            branch = LOGARITHMIC
        else:
            branch = POWER
        return cls(n=n, a=float(a), branch=branch)

    def value(self, bracket_value):
        b = np.asarray(bracket_value, dtype=float)
        if self.branch == BOUNDED:
            out = np.ones_like(b)
        elif self.branch == LOGARITHMIC:
            out = 1.0 + np.log(1.0 / b)
        else:
            out = b ** -(self.n + self.a)
        return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Verification probes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointwiseEstimateReport:
    alpha: float
    branch: str
    fitted_constant: float     # max ratio on the coarse sample
    max_ratio_fine: float
    passed: bool


def verify_pointwise_estimate(
    n: int,
    alpha: float,
    sample_count: int = 400,
    seed: int = 0,
    tol: float = 1e-8,
) -> PointwiseEstimateReport:
    """Check |R_alpha(x,y)| <= C * dominating-kernel over random pairs.

    The constant is fitted as the max ratio on a coarse sample; the check
    then holds the ratio below twice that on a sample four times larger.
    """
    spec = KernelSpec.for_tolerance(n, alpha, tol)
    dom = DominatingKernel.create(n, alpha)
    rng = np.random.default_rng(seed)

    def max_ratio(count: int) -> float:
        xs = sample_ball(rng, n, count)
        ys = sample_ball(rng, n, count)
        rx = np.linalg.norm(xs, axis=1)
        ry = np.linalg.norm(ys, axis=1)
        rho = rx * ry
        dots = np.einsum("ij,ij->i", xs, ys)
        safe = np.maximum(rho, 1e-300)
        t = np.clip(dots / safe, -1.0, 1.0)
        brackets = np.sqrt(1.0 - 2.0 * rho * t + rho * rho)
        vals = np.array(
            [series_matrix(spec, np.array([r]), np.array([c]))[0, 0] for r, c in zip(rho, t)]
        )
        return float(np.max(np.abs(vals) / dom.value(brackets)))

    fitted = max_ratio(sample_count)
    fine = max_ratio(4 * sample_count)
    return PointwiseEstimateReport(
        alpha=alpha,
        branch=dom.branch,
        fitted_constant=fitted,
        max_ratio_fine=fine,
        passed=fine <= 2.0 * fitted,
    )


@dataclass(frozen=True)
class DiagonalReport:
    alpha: float
    predicted_branch: str
    fit: GrowthFit
    slope_target: float
    passed: bool


def verify_diagonal(
    n: int,
    alpha: float,
    radii: np.ndarray | None = None,
    tol: float = 1e-8,
    slope_tol: float = 0.1,
    ratio_spread_max: float = 3.0,
) -> DiagonalReport:
    """Growth of R_alpha(x, x) toward the boundary.

    Power branch (alpha > -n): fitted exponent ~ alpha + n.  Log branch
    (alpha = -n): ratio to 1 + log(1/(1-|x|^2)) confined to an interval.
    Below -n the diagonal stays bounded.
    """
    if radii is None:
        radii = geometric_radius_ladder(10, 0.5, 0.95)
    radii = np.asarray(radii, dtype=float)
    if radii.max() > 0.95:
        raise ValueError("diagonal radii capped at 0.95")
    spec = KernelSpec.for_tolerance(n, alpha, tol)
    values = series_matrix(spec, radii**2, np.array([1.0]))[:, 0]
    fit = fit_growth(radii, values)
    if alpha > -n:
        predicted, target = POWER, alpha + n
        passed = fit.branch == POWER and abs(fit.exponent - target) <= slope_tol
    elif alpha == -n:
        predicted, target = LOGARITHMIC, 0.0
        passed = fit.branch == LOGARITHMIC and fit.log_ratio_spread <= ratio_spread_max
    else:
        predicted, target = BOUNDED, 0.0
        passed = fit.branch == BOUNDED and abs(fit.exponent) <= slope_tol
    return DiagonalReport(
        alpha=alpha, predicted_branch=predicted, fit=fit, slope_target=target, passed=passed
    )


def stay_away_radius(
    n: int,
    alpha: float,
    y_max: float = 0.95,
    tol: float = 1e-8,
    ladder_depth: int = 12,
) -> float:
    """Largest grid-certified epsilon with min R_alpha(x, y) >= 1/2 over
    |x| <= epsilon and the sampled y grid."""
    y_radii = np.linspace(0.0, y_max, 33)
    cos_grid = np.concatenate(([-1.0], np.cos(np.linspace(np.pi, 0.0, 41)[1:-1]), [1.0]))
    for j in range(ladder_depth):
        eps = 0.5 * 2.0**-j
        spec = KernelSpec.for_tolerance(n, alpha, tol, rho_max=eps * y_max)
        x_radii = np.linspace(0.0, eps, 5)
        rho = np.unique(np.outer(x_radii, y_radii).ravel())
        vals = series_matrix(spec, rho, cos_grid)
        if float(vals.min()) >= 0.5:
            return eps
    raise RuntimeError(
        f"stay-away search floor reached: smallest tested epsilon {0.5 * 2.0 ** -(ladder_depth - 1)}"
    )


def sphere_mean_check(n: int, alpha: float, x, t: float, points: int = 96, tol: float = 1e-8) -> float:
    """Sphere average of R_alpha(x, t*zeta); equals 1 by the mean-value property."""
    from .geometry import zonal_rule

    xv = as_vector(x)
    rx = float(np.linalg.norm(xv))
    spec = KernelSpec.for_tolerance(n, alpha, tol, rho_max=max(rx * t, 1e-6))
    zg = zonal_rule(n, points)
    vals = series_matrix(spec, np.array([rx * t]), zg.cos_theta)[0]
    return float(zg.weights @ vals)
