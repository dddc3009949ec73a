"""Geometry and measure layer for the unit ball of R^n.

Points of the open ball B, the bracket [x,y] = sqrt(1 - 2 x.y + |x|^2 |y|^2),
normalized weighted measures nu_alpha with d nu_alpha = (1/V_alpha)(1-|x|^2)^alpha d nu,
and quadrature rules adapted to the endpoint weight (1-r^2)^w on (0,1).

All ball integrals in this package are of zonal integrands (they depend on y
only through |y| and the angle against a fixed axis), so sphere integration
reduces to a 1-D rule in the polar angle with weight sin^(n-2)(theta).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

# Points with norm at or above this are rejected as degenerate for
# ball-interior operations.
MAX_INTERIOR_NORM = 1.0 - 1e-12


@dataclass(frozen=True)
class BallPoint:
    """A point of the open unit ball of R^n with cached Euclidean norm."""

    coords: np.ndarray
    norm: float = field(init=False)

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.ndim != 1 or coords.size < 2:
            raise ValueError("BallPoint needs a vector of dimension n >= 2")
        coords = coords.copy()
        coords.flags.writeable = False
        norm = float(np.linalg.norm(coords))
        if norm >= MAX_INTERIOR_NORM:
            raise ValueError(f"degenerate point: |x| = {norm} >= 1 - 1e-12")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "norm", norm)

    @property
    def dim(self) -> int:
        return self.coords.size


def as_vector(point) -> np.ndarray:
    """Coerce a BallPoint or array-like to a coordinate vector."""
    if isinstance(point, BallPoint):
        return point.coords
    return np.asarray(point, dtype=float)


def radial_point(n: int, radius: float, axis: int = 0) -> BallPoint:
    """The point radius * e_axis in R^n."""
    coords = np.zeros(n)
    coords[axis] = radius
    return BallPoint(coords)


def bracket(x, y) -> float:
    """[x,y] = sqrt(1 - 2 x.y + |x|^2 |y|^2).

    Symmetric, and equals |x - zeta| when y = zeta lies on the sphere.
    Accepts points of the closed ball (y may have norm 1).
    """
    xv, yv = as_vector(x), as_vector(y)
    if xv.shape != yv.shape:
        raise ValueError(f"dimension mismatch: {xv.shape} vs {yv.shape}")
    nx2 = float(xv @ xv)
    ny2 = float(yv @ yv)
    return float(np.sqrt(1.0 - 2.0 * float(xv @ yv) + nx2 * ny2))


def bracket_grid(r: np.ndarray, t: np.ndarray, cos_angle: np.ndarray) -> np.ndarray:
    """[x,y] on a polar grid: |x| = r, |y| = t, x.y = r t cos_angle.

    Broadcasts its arguments; callers pass r scalar, t as a radial column and
    cos_angle as an angular row to get the full 2-D evaluation grid.
    """
    rho = r * t
    return np.sqrt(np.maximum(1.0 - 2.0 * rho * cos_angle + rho * rho, 0.0))


def bracket_sq_stable(
    r,
    one_minus_r,
    t,
    one_minus_t,
    cos_angle,
    one_minus_cos,
) -> np.ndarray:
    """[x,y]^2 = (1 - rho)^2 + 2 rho (1 - cos), rho = r t, with no cancellation.

    The direct form 1 - 2 rho cos + rho^2 loses all precision once
    1 - rho ~ 1e-8; this one keeps full relative accuracy down to the
    corner rho -> 1, cos -> 1, given 1-r, 1-t, 1-cos at full precision.
    """
    rho = r * t
    one_minus_rho = one_minus_t + t * one_minus_r
    return one_minus_rho * one_minus_rho + 2.0 * rho * one_minus_cos


# ---------------------------------------------------------------------------
# Radial quadrature: tanh-sinh transform on (0,1)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialGrid:
    """Nodes/weights for integrals int_0^1 n r^(n-1) (1-r^2)^w g(r) dr.

    The measure factor n r^(n-1) (1-r^2)^w is absorbed into the weights, so
    integrating g means dot(weights, g(nodes)).  Built on the tanh-sinh
    (double exponential) substitution, which damps the algebraic endpoint
    singularity for every w > -1 without node placement at r = 1.

    Deep nodes round to 1.0 in floating point; one_minus_nodes carries 1-r
    at full relative precision for integrands that cancel near the endpoint.
    """

    nodes: np.ndarray
    weights: np.ndarray
    jacobi_exponent: float
    log_one_minus_sq: np.ndarray  # log(1 - nodes^2), stable near the endpoint
    one_minus_nodes: np.ndarray   # 1 - nodes, stable near the endpoint

    def integrate(self, g) -> float:
        return float(self.weights @ g(self.nodes))

    def integrate_values(self, values: np.ndarray) -> float:
        return float(self.weights @ values)


def radial_rule(n: int, weight_exponent: float, points: int = 240) -> RadialGrid:
    """Build the (0,1) rule for weight n r^(n-1) (1-r^2)^weight_exponent.

    Raises for weight_exponent <= -1: the weight alone is non-integrable and
    the caller must treat the integral as divergent, never quadrate it.
    """
    w = float(weight_exponent)
    if w <= -1.0:
        raise ValueError(f"divergent weight: (1-r^2)^{w} is not integrable on (0,1)")
    if points < 8:
        raise ValueError("points must be >= 8")
    if n < 2:
        raise ValueError("dimension n must be >= 2")

    # Tail of the transformed integrand decays like exp(-2 s min(1+w, n));
    # pick the truncation so the discarded tail is far below round-off even
    # against slowly varying log factors.
    decay = min(1.0 + w, float(n))
    s_max = 30.0 / decay
    u_max = float(np.arcsinh(2.0 * s_max / np.pi))
    u_max = max(u_max, 3.2)

    u = np.linspace(-u_max, u_max, points)
    h = u[1] - u[0]
    s = 0.5 * np.pi * np.sinh(u)

    log_r = -np.logaddexp(0.0, -2.0 * s)          # r = 1/(1+e^(-2s))
    log_one_minus_r = -np.logaddexp(0.0, 2.0 * s)  # 1-r = 1/(1+e^(2s))
    r = np.exp(log_r)
    log_one_minus_sq = log_one_minus_r + np.log1p(r)

    # dr/du = (pi/4) cosh(u) / cosh(s)^2, all in log space
    abs_s = np.abs(s)
    log_cosh_s = abs_s + np.log1p(np.exp(-2.0 * abs_s)) - np.log(2.0)
    log_jac = np.log(np.pi / 4.0) + np.log(np.cosh(u)) - 2.0 * log_cosh_s

    log_weight = (
        np.log(h)
        + log_jac
        + np.log(float(n))
        + (n - 1) * log_r
        + w * log_one_minus_sq
    )
    weights = np.exp(log_weight)

    keep = weights > 0.0
    return RadialGrid(
        nodes=r[keep],
        weights=weights[keep],
        jacobi_exponent=w,
        log_one_minus_sq=log_one_minus_sq[keep],
        one_minus_nodes=np.exp(log_one_minus_r)[keep],
    )


# ---------------------------------------------------------------------------
# Polar-angle quadrature on the sphere
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZonalGrid:
    """Rule for the normalized sphere average of a zonal function.

    Integrates g(theta) against sin^(n-2)(theta) on [0, pi], normalized to
    total mass 1.  one_minus_cos carries 1 - cos(theta) = 2 sin^2(theta/2)
    at full relative precision for integrands that cancel at theta = 0.
    """

    theta: np.ndarray
    cos_theta: np.ndarray
    weights: np.ndarray
    one_minus_cos: np.ndarray

    def integrate(self, g) -> float:
        return float(self.weights @ g(self.theta))

    def integrate_values(self, values: np.ndarray) -> float:
        return float(self.weights @ values)


def zonal_rule(n: int, points: int = 96) -> ZonalGrid:
    """Gauss-Jacobi rule in t = cos(theta) for the weight (1-t^2)^((n-3)/2)."""
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    a = (n - 3) / 2.0
    t, wt = roots_jacobi(points, a, a)
    wt = wt / wt.sum()
    theta = np.arccos(t)[::-1]
    return ZonalGrid(
        theta=theta,
        cos_theta=t[::-1],
        weights=wt[::-1],
        one_minus_cos=2.0 * np.sin(theta / 2.0) ** 2,
    )


def polar_peak_rule(n: int, points: int = 256) -> ZonalGrid:
    """Tanh-sinh rule in theta on (0, pi) for the weight sin^(n-2)(theta).

    Node density grows double-exponentially toward theta = 0 and pi, which
    resolves kernel peaks of any width near the poles; use this instead of
    the Gauss rule when the integrand is nearly singular at theta = 0, as
    bracket powers are when |x||y| -> 1.
    """
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    u_max = 3.6
    u = np.linspace(-u_max, u_max, points)
    h = u[1] - u[0]
    s = 0.5 * np.pi * np.sinh(u)
    # theta = pi/(1+e^(-2s)), reflected pair handled by symmetry of u
    log_frac = -np.logaddexp(0.0, -2.0 * s)       # log(theta/pi)
    log_one_minus = -np.logaddexp(0.0, 2.0 * s)   # log(1 - theta/pi)
    theta = np.pi * np.exp(log_frac)
    abs_s = np.abs(s)
    log_cosh_s = abs_s + np.log1p(np.exp(-2.0 * abs_s)) - np.log(2.0)
    log_jac = np.log(np.pi * np.pi / 4.0) + np.log(np.cosh(u)) - 2.0 * log_cosh_s
    # sin(theta)^(n-2), stable at both poles via sin(theta) = sin(pi * min(frac, 1-frac))
    small = np.minimum(np.exp(log_frac), np.exp(log_one_minus))
    log_sin = np.log(np.sin(np.pi * small))
    log_weight = log_jac + (n - 2) * log_sin + np.log(h)
    w = np.exp(log_weight)
    keep = w > 0.0
    theta, w = theta[keep], w[keep]
    w = w / w.sum()
    return ZonalGrid(
        theta=theta,
        cos_theta=np.cos(theta),
        weights=w,
        one_minus_cos=2.0 * np.sin(theta / 2.0) ** 2,
    )


# ---------------------------------------------------------------------------
# Weighted measures
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _v_alpha_cached(n: int, alpha: float) -> float:
    if alpha <= -1.0:
        return 1.0
    grid = radial_rule(n, alpha)
    return grid.integrate(lambda r: np.ones_like(r))


def v_alpha(n: int, alpha) -> float:
    """Normalization V_alpha of nu_alpha.

    For alpha > -1 this is int_B (1-|x|^2)^alpha d nu, evaluated by the
    radial rule, which makes nu_alpha a probability measure; for alpha <= -1
    the convention V_alpha = 1 applies.
    """
    if n < 2:
        raise ValueError("dimension n must be >= 2")
    return _v_alpha_cached(n, float(alpha))


@dataclass(frozen=True)
class WeightedMeasure:
    """The measure nu_alpha = (1/V_alpha)(1-|x|^2)^alpha nu on B."""

    alpha: float
    v_alpha: float

    @classmethod
    def create(cls, n: int, alpha: float) -> "WeightedMeasure":
        return cls(alpha=float(alpha), v_alpha=v_alpha(n, alpha))


def ball_integral(
    n: int,
    weight_exponent: float,
    integrand,
    radial_points: int = 240,
    angular_points: int = 96,
) -> float:
    """int_B (1-|y|^2)^w F(|y|, cos theta) d nu(y) for a zonal integrand.

    ``integrand(t, cos_theta)`` must broadcast over a radial column t[:,None]
    and an angular row cos_theta[None,:].
    """
    rg = radial_rule(n, weight_exponent, radial_points)
    zg = zonal_rule(n, angular_points)
    vals = integrand(rg.nodes[:, None], zg.cos_theta[None, :])
    return float(rg.weights @ vals @ zg.weights)


def sample_ball(rng: np.random.Generator, n: int, size: int, max_norm: float = 0.95) -> np.ndarray:
    """Random points of radius <= max_norm, uniform in radius and direction."""
    directions = rng.normal(size=(size, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = rng.uniform(0.0, max_norm, size=size)
    return directions * radii[:, None]
