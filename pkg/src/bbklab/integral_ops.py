"""The weighted integral operators against the parameter-c kernel,

    T f(x) = int_B R_c(x,y) f(y) (1-|y|^2)^b d nu(y),
    S f(x) = int_B |R_c(x,y)| f(y) (1-|y|^2)^b d nu(y),

realized numerically on radial and zonal-mode inputs, together with the
power test functions f_uv, the formal adjoint, the projection built from the
parameter-s kernel, growth-rate verifiers for the two weighted-integral
trichotomies, and the critical-parameter log blow-up probe.

Divergence policy: an integral is declared Divergent only by the calculus
criterion on its radial weight (integrability of (1-t^2)^w against a log
power); quadrature instability raises QuadratureNonConvergence instead and
never certifies divergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geometry import (
    RadialGrid,
    as_vector,
    bracket_sq_stable,
    polar_peak_rule,
    radial_rule,
    v_alpha,
    zonal_rule,
)
from .growth import BOUNDED, LOGARITHMIC, POWER, GrowthFit, fit_growth, geometric_radius_ladder
from .kernel import KernelSpec, series_matrix
from .radial_ops import Expansion, apply_D
from .specfun import gamma_k
from .zonal import zonal, zonal_angular_matrix


class Divergent:
    """Marker for integrals certified divergent by the calculus criterion."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Divergent"


DIVERGENT = Divergent()


def is_divergent(value) -> bool:
    return isinstance(value, Divergent)


class QuadratureNonConvergence(RuntimeError):
    """Refinement failed to stabilize on an integral the criterion calls finite."""


@dataclass(frozen=True)
class TestFunction:
    """f_uv(x) = (1-|x|^2)^u (1 + log(1/(1-|x|^2)))^(-v); radial and positive."""

    u: float
    v: float

    def radial_values(self, t: np.ndarray) -> np.ndarray:
        one_minus = 1.0 - t * t
        return one_minus**self.u * (1.0 - np.log(one_minus)) ** -self.v


@dataclass(frozen=True)
class ZonalModeInput:
    """f(y) = radial_profile(|y|) * Z_m(y/|y|, anchor)."""

    m: int
    anchor: np.ndarray
    radial_profile: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self):
        anchor = np.asarray(self.anchor, dtype=float)
        anchor = anchor / np.linalg.norm(anchor)
        anchor.flags.writeable = False
        object.__setattr__(self, "anchor", anchor)


@dataclass(frozen=True)
class OperatorParams:
    """Dimension and the two exponents: kernel parameter c, weight power b."""

    n: int
    b: float
    c: float


# ---------------------------------------------------------------------------
# Radial integrals of the test functions
# ---------------------------------------------------------------------------


def fuv_finite(w: float, v: float) -> bool:
    """Integrability of (1-t^2)^w (1+log 1/(1-t^2))^(-v) on (0,1)."""
    return w > -1.0 or (w == -1.0 and v > 1.0)


def membership_fuv(p, alpha: float, u: float, v: float) -> bool:
    """Whether f_uv lies in the p-th Lebesgue class of nu_alpha.

    Finite p: alpha + p u > -1, or alpha + p u = -1 and p v > 1.
    p = inf (the damped sup-norm class): alpha + u > 0, or u = -alpha and v >= 0.
    """
    if p == math.inf:
        return alpha + u > 0.0 or (u == -alpha and v >= 0.0)
    if p < 1:
        raise ValueError("p must be >= 1 or inf")
    return fuv_finite(alpha + p * u, p * v)


def _tanh_sinh_nodes(points: int = 160, u_max: float = 3.5):
    u = np.linspace(-u_max, u_max, points)
    h = u[1] - u[0]
    s = 0.5 * np.pi * np.sinh(u)
    x = np.tanh(s)  # on (-1, 1)
    w = h * 0.5 * np.pi * np.cosh(u) / np.cosh(s) ** 2
    return x, w


def _log_weight_integral(n: int, v: float, profile=None, xi_max: float = 60.0, points: int = 200) -> float:
    """int_0^1 n t^(n-1) (1-t^2)^(-1) (1+log 1/(1-t^2))^(-v) profile(t) dt for v > 1.

    Substituting xi = 1 + log(1/(1-t^2)) turns this into
    (n/2) int_1^inf (1 - e^(1-xi))^((n-2)/2) xi^(-v) profile(t(xi)) dxi,
    quadrated on [1, xi_max] with the closed-form tail profile(1) *
    (n/2) xi_max^(1-v)/(v-1).
    """
    x, w = _tanh_sinh_nodes(points)
    xi = 0.5 * (1.0 + xi_max) + 0.5 * (xi_max - 1.0) * x
    wxi = 0.5 * (xi_max - 1.0) * w
    t = np.sqrt(-np.expm1(1.0 - xi))
    vals = t ** (n - 2) * xi**-v
    if profile is not None:
        vals = vals * profile(t)
    head = 0.5 * n * float(wxi @ vals)
    edge = 1.0 if profile is None else float(profile(np.array([1.0 - 1e-14]))[0])
    tail = 0.5 * n * edge * xi_max ** (1.0 - v) / (v - 1.0)
    return head + tail


def fuv_radial_integral(n: int, w: float, v: float, points: int = 240) -> float:
    """int_0^1 n t^(n-1) (1-t^2)^w (1+log 1/(1-t^2))^(-v) dt, finite parameters only."""
    if not fuv_finite(w, v):
        raise ValueError("divergent radial integral; check fuv_finite first")
    if w == -1.0:
        return _log_weight_integral(n, v)
    grid = radial_rule(n, w, points)
    return float(grid.weights @ (1.0 - grid.log_one_minus_sq) ** -v)


def apply_T_radial(params: OperatorParams, u: float, v: float):
    """T applied to f_uv: the constant int_0^1 n t^(n-1)(1-t^2)^(b+u) (1+log...)^(-v) dt,
    by the sphere mean-value property; Divergent outside the integrability region."""
    w = params.b + u
    if not fuv_finite(w, v):
        return DIVERGENT
    return fuv_radial_integral(params.n, w, v)


# ---------------------------------------------------------------------------
# Pointwise S on test functions
# ---------------------------------------------------------------------------


def _abs_kernel_angular_means(
    params: OperatorParams, r_x: float, t_nodes: np.ndarray, angular_points: int, tol: float = 1e-9
) -> np.ndarray:
    """A(t) = normalized sphere integral of |R_c(x, t*omega)| at |x| = r_x."""
    zg = polar_peak_rule(params.n, angular_points)
    spec = KernelSpec.for_tolerance(params.n, params.c, tol, rho_max=max(r_x, 1e-9))
    vals = np.abs(series_matrix(spec, r_x * t_nodes, zg.cos_theta))
    return vals @ zg.weights


def apply_S_pointwise(
    params: OperatorParams,
    f: TestFunction,
    x,
    radial_points: int = 200,
    angular_points: int = 192,
    levels: int = 3,
    rtol: float = 1e-6,
):
    """S applied to f_uv at x, by radius-angle quadrature of |R_c|.

    Returns Divergent exactly when the calculus criterion on b+u says so;
    raises QuadratureNonConvergence if refinement fails to stabilize on an
    integral the criterion calls finite.
    """
    xv = as_vector(x)
    r_x = float(np.linalg.norm(xv))
    if r_x > 0.95:
        raise ValueError("apply_S_pointwise requires |x| <= 0.95")
    w = params.b + f.u
    if not fuv_finite(w, f.v):
        return DIVERGENT

    def integral(scale: float) -> float:
        rp = int(radial_points * scale)
        ap = int(angular_points * scale)
        if w == -1.0:
            def profile(t):
                return _abs_kernel_angular_means(params, r_x, t, ap)
            return _log_weight_integral(params.n, f.v, profile=profile, points=rp)
        rg = radial_rule(params.n, w, rp)
        log_factor = (1.0 - rg.log_one_minus_sq) ** -f.v
        means = _abs_kernel_angular_means(params, r_x, rg.nodes, ap)
        return float(rg.weights @ (log_factor * means))

    values = [integral(1.5**j) for j in range(levels)]
    if abs(values[-1] - values[-2]) > rtol * abs(values[-1]) + 1e-12:
        raise QuadratureNonConvergence(
            f"S refinement unstable: {values} (criterion says finite)"
        )
    return values[-1]


# ---------------------------------------------------------------------------
# Zonal-mode inputs: T acts mode by mode
# ---------------------------------------------------------------------------


def mode_radial_integral(params: OperatorParams, f: ZonalModeInput, points: int = 240) -> float:
    """int_0^1 n t^(n-1+m) g(t) (1-t^2)^b dt for the mode profile g."""
    if params.b <= -1.0:
        raise ValueError("radial profile not integrable against (1-t^2)^b for b <= -1")
    grid = radial_rule(params.n, params.b, points)
    return float(grid.weights @ (grid.nodes**f.m * f.radial_profile(grid.nodes)))


def apply_T_zonal_mode(params: OperatorParams, f: ZonalModeInput, x, points: int = 240) -> float:
    """T on a mode-m input: gamma_m(c) Z_m(x, anchor) times the mode radial integral.

    The sphere reproducing property collapses the angular integral to the
    single degree m; cross-validate against apply_T_zonal_mode_quadrature.
    """
    xv = as_vector(x)
    if float(np.linalg.norm(xv)) > 0.95:
        raise ValueError("requires |x| <= 0.95")
    radial = mode_radial_integral(params, f, points)
    return gamma_k(params.n, params.c, f.m) * zonal(f.m, xv, f.anchor) * radial


def apply_T_zonal_mode_quadrature(
    params: OperatorParams,
    f: ZonalModeInput,
    x,
    radial_points: int = 240,
    angular_points: int = 256,
    tol: float = 1e-9,
) -> float:
    """Full radius-angle quadrature of the defining integral for a mode input.

    Needs x parallel (or antiparallel) to the anchor so the whole integrand
    is zonal about one axis.
    """
    xv = as_vector(x)
    r_x = float(np.linalg.norm(xv))
    if r_x > 0.95:
        raise ValueError("requires |x| <= 0.95")
    if params.b <= -1.0:
        raise ValueError("radial profile not integrable against (1-t^2)^b for b <= -1")
    if r_x == 0.0:
        sign = 1.0
    else:
        cosine = float(xv @ f.anchor) / r_x
        if abs(abs(cosine) - 1.0) > 1e-12:
            raise ValueError("quadrature route needs x parallel to the anchor")
        sign = math.copysign(1.0, cosine)
    rg = radial_rule(params.n, params.b, radial_points)
    zg = polar_peak_rule(params.n, angular_points)
    spec = KernelSpec.for_tolerance(params.n, params.c, tol, rho_max=max(r_x, 1e-9))
    kernel_vals = series_matrix(spec, r_x * rg.nodes, sign * zg.cos_theta)
    mode_vals = zonal_angular_matrix(params.n, f.m, zg.cos_theta)[f.m]
    angular = kernel_vals @ (zg.weights * mode_vals)
    return float(rg.weights @ (f.radial_profile(rg.nodes) * angular))


def apply_T_weighted_expansion(
    params: OperatorParams, h: Expansion, tau: float, x, points: int = 240
) -> float:
    """T applied to (1-|y|^2)^tau h(y) for a finite expansion h.

    Mode k contributes gamma_k(c) Z_k(x, anchor) int n t^(n-1+2k)(1-t^2)^(b+tau) dt.
    """
    if params.b + tau <= -1.0:
        raise ValueError("weight b + tau must exceed -1")
    xv = as_vector(x)
    grid = radial_rule(params.n, params.b + tau, points)
    total = 0.0
    for k, coeff in enumerate(h.coeffs):
        if coeff == 0.0:
            continue
        radial = float(grid.weights @ grid.nodes ** (2 * k))
        total += coeff * gamma_k(params.n, params.c, k) * zonal(k, xv, h.anchor) * radial
    return total


# ---------------------------------------------------------------------------
# Adjoint and projection
# ---------------------------------------------------------------------------


def adjoint_check(
    params: OperatorParams,
    p: float,
    q: float,
    alpha: float,
    beta: float,
    f: ZonalModeInput,
    g: ZonalModeInput,
    points: int = 240,
    angular_points: int = 96,
) -> float:
    """Deviation |<T f, g>_beta - <f, T* g>_alpha| for mode inputs.

    The pairings are the plain weighted integrals int u v (1-|x|^2)^w d nu
    (no V normalization), for which the adjoint identity
    T* g = (1-|x|^2)^(b-alpha) int R_c(.,y) g(y) (1-|y|^2)^beta d nu(y)
    is exact.  Anchors must be colinear so every integrand stays zonal.
    """
    if not (1 <= p < math.inf and 1 <= q < math.inf):
        raise ValueError("exponent data must be finite and >= 1")
    if alpha <= -1.0 or beta <= -1.0 or params.b <= -1.0:
        raise ValueError("weights must exceed -1 for the quadrature pairing")
    sign = float(f.anchor @ g.anchor)
    if abs(abs(sign) - 1.0) > 1e-12:
        raise ValueError("anchors must be colinear")
    n, c = params.n, params.c
    zg = zonal_rule(n, angular_points)
    ang_f = zonal_angular_matrix(n, f.m, zg.cos_theta)[f.m]
    ang_g = zonal_angular_matrix(n, g.m, math.copysign(1.0, sign) * zg.cos_theta)[g.m]
    angular = float(zg.weights @ (ang_f * ang_g))

    i_f = mode_radial_integral(params, f, points)  # weight b on f side
    beta_grid = radial_rule(n, beta, points)
    lhs = (
        gamma_k(n, c, f.m)
        * i_f
        * float(beta_grid.weights @ (beta_grid.nodes**f.m * g.radial_profile(beta_grid.nodes)))
        * angular
    )

    i_g = float(beta_grid.weights @ (beta_grid.nodes**g.m * g.radial_profile(beta_grid.nodes)))
    b_grid = radial_rule(n, params.b, points)
    rhs = (
        gamma_k(n, c, g.m)
        * i_g
        * float(b_grid.weights @ (b_grid.nodes**g.m * f.radial_profile(b_grid.nodes)))
        * angular
    )
    return abs(lhs - rhs)


def project(s: float, f, x, points: int = 240):
    """The kernel projection at parameter s: (1/V_s) T_ss f(x), s > -1.

    Accepts a TestFunction (radial) or a ZonalModeInput.
    """
    if s <= -1.0:
        raise ValueError("projection needs s > -1 for the normalized measure")
    xv = as_vector(x)
    n = xv.size
    params = OperatorParams(n=n, b=s, c=s)
    vs = v_alpha(n, s)
    if isinstance(f, TestFunction):
        value = apply_T_radial(params, f.u, f.v)
        if is_divergent(value):
            return DIVERGENT
        return value / vs
    return apply_T_zonal_mode(params, f, xv, points) / vs


# ---------------------------------------------------------------------------
# Growth-rate verifiers for the two weighted-integral estimates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthReport:
    """Fitted boundary growth against the predicted trichotomy branch."""

    parameter: float            # the branch parameter: w, or s
    predicted_branch: str
    fit: GrowthFit
    exponent_tol: float
    passed: bool


def _predict_branch(value: float) -> str:
    if value < 0.0:
        return BOUNDED
    if value == 0.0:
        return LOGARITHMIC
    return POWER


def _growth_report(parameter: float, fit: GrowthFit, exponent_tol: float) -> GrowthReport:
    predicted = _predict_branch(parameter)
    if predicted == POWER:
        passed = fit.branch == POWER and abs(fit.exponent - parameter) <= exponent_tol
    else:
        passed = fit.branch == predicted
    return GrowthReport(parameter, predicted, fit, exponent_tol, passed)


def kernel_power_integral_ladder(
    n: int,
    alpha: float,
    p: float,
    d: float,
    radii: np.ndarray,
    radial_points: int = 220,
    angular_points: int = 224,
    tol: float = 1e-9,
) -> np.ndarray:
    """int_B |R_alpha(x,y)|^p (1-|y|^2)^d d nu(y) along |x| = radii."""
    if d <= -1.0:
        raise ValueError("requires d > -1")
    rg = radial_rule(n, d, radial_points)
    zg = polar_peak_rule(n, angular_points)
    spec = KernelSpec.for_tolerance(n, alpha, tol, rho_max=float(np.max(radii)))
    out = np.empty(len(radii))
    for i, r in enumerate(radii):
        vals = np.abs(series_matrix(spec, r * rg.nodes, zg.cos_theta)) ** p
        out[i] = float(rg.weights @ vals @ zg.weights)
    return out


def forelli_rudin_kernel_growth(
    n: int,
    alpha: float,
    p: float,
    d: float,
    radii: np.ndarray | None = None,
    exponent_tol: float = 0.1,
) -> GrowthReport:
    """Growth trichotomy of the weighted kernel-power integral.

    The branch parameter is w = p(n+alpha) - (n+d): bounded below 0,
    logarithmic at 0, power of exponent w above 0.
    """
    if radii is None:
        radii = geometric_radius_ladder(12, 0.5, 0.95)
    radii = np.asarray(radii, dtype=float)
    if radii.max() > 0.95:
        raise ValueError("kernel-power ladder capped at |x| = 0.95")
    w = p * (n + alpha) - (n + d)
    values = kernel_power_integral_ladder(n, alpha, p, d, radii)
    return _growth_report(w, fit_growth(radii, values), exponent_tol)


def bracket_power_integral_ladder(
    n: int,
    d: float,
    s: float,
    radii: np.ndarray,
    radial_points: int = 220,
    angular_points: int = 256,
    one_minus_radii: np.ndarray | None = None,
) -> np.ndarray:
    """int_B (1-|y|^2)^d / [x,y]^(n+d+s) d nu(y) along |x| = radii.

    Pass one_minus_radii when the radii themselves round to 1 (tanh-sinh
    outer nodes in nested integrals); the bracket is evaluated in the
    cancellation-free form throughout.
    """
    if d <= -1.0:
        raise ValueError("requires d > -1")
    rg = radial_rule(n, d, radial_points)
    zg = polar_peak_rule(n, angular_points)
    if one_minus_radii is None:
        one_minus_radii = 1.0 - np.asarray(radii, dtype=float)
    exponent = n + d + s
    out = np.empty(len(radii))
    for i, r in enumerate(radii):
        br2 = bracket_sq_stable(
            r,
            one_minus_radii[i],
            rg.nodes[:, None],
            rg.one_minus_nodes[:, None],
            zg.cos_theta[None, :],
            zg.one_minus_cos[None, :],
        )
        out[i] = float(rg.weights @ br2 ** (-exponent / 2.0) @ zg.weights)
    return out


def forelli_rudin_bracket_growth(
    n: int,
    d: float,
    s: float,
    radii: np.ndarray | None = None,
    exponent_tol: float = 0.1,
) -> GrowthReport:
    """Growth trichotomy of the weighted bracket-power integral on s."""
    if radii is None:
        radii = geometric_radius_ladder(12, 0.5, 1.0 - 2.0**-9)
    radii = np.asarray(radii, dtype=float)
    values = bracket_power_integral_ladder(n, d, s, radii)
    return _growth_report(s, fit_growth(radii, values), exponent_tol)


# ---------------------------------------------------------------------------
# The critical-parameter blow-up probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupReport:
    beta: float
    radii: np.ndarray
    values: np.ndarray          # (1/V_beta) int |R_beta(x,y)| (1-|y|^2)^beta d nu(y)
    log_ratios: np.ndarray      # values / (1 + log(1/(1-r^2)))
    ratio_spread: float
    growth_factor: float        # last value / first value
    passed: bool


def log_blowup_probe(
    n: int,
    beta: float,
    radii: np.ndarray | None = None,
    ratio_spread_max: float = 2.5,
    growth_min: float = 1.5,
) -> BlowupReport:
    """The normalized absolute-kernel mass at the critical parameters.

    At b = c = beta the quantity (1/V_beta) int |R_beta(x,y)|(1-|y|^2)^beta
    d nu(y) grows like 1 + log(1/(1-|x|^2)): its ratio to that comparison
    stays in a fixed positive interval while the values themselves grow
    without bound.  This is the quantitative engine behind excluding the
    double-equality corner of the two endpoint cases.
    """
    if beta <= -1.0:
        raise ValueError("requires beta > -1")
    if radii is None:
        radii = geometric_radius_ladder(10, 0.5, 0.95)
    radii = np.asarray(radii, dtype=float)
    if radii.max() == 0.0:
        values = np.ones_like(radii)
    else:
        values = kernel_power_integral_ladder(n, beta, 1.0, beta, np.maximum(radii, 1e-12))
        values = values / v_alpha(n, beta)
    log_ratios = values / (1.0 + np.log(1.0 / (1.0 - radii**2)))
    spread = float(log_ratios.max() / log_ratios.min())
    growth = float(values[-1] / values[0])
    passed = spread <= ratio_spread_max and growth >= growth_min and bool(
        np.all(np.diff(values) > 0.0)
    )
    return BlowupReport(
        beta=beta,
        radii=radii,
        values=values,
        log_ratios=log_ratios,
        ratio_spread=spread,
        growth_factor=growth,
        passed=passed,
    )
