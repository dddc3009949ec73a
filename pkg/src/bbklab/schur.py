"""Explicit sufficiency certificates for the boundedness classifier.

Two Schur-test routes carry the hard cases:

  case 1.1 (1 < p <= q < inf): kernel (1-|x|^2)^(b-alpha)/[x,y]^(n+c) against
  the measures nu_alpha, nu_beta, with power test functions (1-|.|^2)^A,
  (1-|.|^2)^B and a split gamma + delta = 1 of the kernel exponent.  The
  certificate pins the free choices at midpoints: B at the midpoint of
  (-(1+beta)/q, 0), epsilon at half its admissible cap.

  case 1.3 (1 < q < p < inf): the same kernel, with (A, B) the unique
  solution of the 2x2 linear system matching both growth rates, at
  c_effective = critical - epsilon, plus a finite double integral.

The remaining cases (1.2, 1.3 at q = 1, 1.4-1.7) are certified by direct
J-function routes: a weighted bracket integral (or supremum) whose
boundedness follows the trichotomy of the branch parameter, certified here
by quadrature along a radius ladder.

All certificate inequalities are evaluated exactly in rational arithmetic
when the input parameters are rational; the numerical verifiers then
confirm the growth rates the inequalities promise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classifier import Number, Params, classify, format_number, theorem_case
from .geometry import polar_peak_rule, radial_rule
from .growth import (
    BOUNDED,
    LOGARITHMIC,
    POWER,
    extrapolated_power,
    fit_growth,
    geometric_radius_ladder,
)
from .integral_ops import bracket_power_integral_ladder
from .kernel import KernelSpec, series_matrix

INF = math.inf


class CertificateRegionError(ValueError):
    """The parameters do not satisfy the target case's boundedness region."""


def _exactify(params: Params):
    n = params.n
    b, c, alpha, beta, p, q = params.b, params.c, params.alpha, params.beta, params.p, params.q
    if params.exact:
        b, c, alpha, beta = Fraction(b), Fraction(c), Fraction(alpha), Fraction(beta)
        p = p if p == INF else Fraction(p)
        q = q if q == INF else Fraction(q)
    return n, b, c, alpha, beta, p, q


def _require_case(params: Params, case: str) -> None:
    actual = theorem_case(params.p, params.q)
    if actual != case:
        raise CertificateRegionError(f"(p, q) lies in case {actual}, not {case}")
    if not classify(params).bounded:
        raise CertificateRegionError("parameters violate the case's boundedness region")


def _check_consistency(deviation, exact: bool, what: str) -> None:
    if exact:
        if deviation != 0:
            raise AssertionError(f"certificate bug: {what} fails exactly, dev = {deviation}")
    elif abs(float(deviation)) > 1e-9:
        raise AssertionError(f"certificate bug: {what} deviates by {float(deviation)}")


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    margin: Number         # amount by which the strict inequality holds
    holds: bool

    def to_json_dict(self) -> dict:
        return {"name": self.name, "margin": format_number(self.margin), "holds": self.holds}


@dataclass(frozen=True)
class SchurCertificate:
    """Proof data for one of the two Schur routes.

    c_effective is the kernel parameter actually certified; it never falls
    below the requested c, so monotonicity in the kernel parameter carries
    the certificate down to the request.
    """

    case: str
    params: Params
    c_effective: Number
    A: Number
    B: Number
    gamma: Number | None
    delta: Number | None
    epsilon: Number
    checks: tuple[InequalityCheck, ...]
    exact: bool

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "c_effective": format_number(self.c_effective),
            "A": format_number(self.A),
            "B": format_number(self.B),
            "gamma": None if self.gamma is None else format_number(self.gamma),
            "delta": None if self.delta is None else format_number(self.delta),
            "epsilon": format_number(self.epsilon),
            "checks": [c.to_json_dict() for c in self.checks],
            "exact": self.exact,
        }


def build_certificate_11(params: Params, epsilon: Number | None = None, b_exponent: Number | None = None) -> SchurCertificate:
    """Materialize the case-1.1 Schur data at the critical kernel parameter.

    Free choices default to the midpoint of the admissible B interval and
    half the epsilon cap min(b+1-(alpha+1)/p, n-1); the cap n-1 keeps the
    certified parameter above -n even where slack.
    """
    _require_case(params, "1.1")
    n, b, c, alpha, beta, p, q = _exactify(params)
    exact = params.exact
    crit = b + (n + beta) / q - (n + alpha) / p
    c_eff = crit
    pprime = p / (p - 1)

    eps_cap = b + 1 - (alpha + 1) / p
    eps = epsilon if epsilon is not None else min(eps_cap, n - 1) / 2
    if not 0 < eps < eps_cap:
        raise CertificateRegionError(f"epsilon must lie in (0, {eps_cap})")
    B = b_exponent if b_exponent is not None else -(1 + beta) / (2 * q)
    if not -(1 + beta) / q < B < 0:
        raise CertificateRegionError("B must lie in (-(1+beta)/q, 0)")

    delta = (B + (n + beta) / q + eps) / (n + c_eff)
    gamma = (-B + n + b - (n + alpha) / p - eps) / (n + c_eff)
    A = (b - alpha) * delta - eps

    F1 = (b - alpha) * gamma * pprime + A * pprime + alpha
    F2 = (n + c_eff) * gamma * pprime - n - (b - alpha) * gamma * pprime - A * pprime - alpha
    fourth = (n + c_eff) * delta * q - n - B * q - beta

    _check_consistency(gamma + delta - 1, exact, "gamma + delta = 1")
    _check_consistency(F2 + B * pprime, exact, "F2 = -B p'")
    _check_consistency(fourth + A * q - (b - alpha) * delta * q, exact, "fourth = (b-alpha)delta q - A q")

    checks = (
        InequalityCheck("F1 > -1", F1 + 1, F1 > -1),
        InequalityCheck("B q + beta > -1", B * q + beta + 1, B * q + beta > -1),
        InequalityCheck("F2 > 0", F2, F2 > 0),
        InequalityCheck("(n+c)delta q - n - B q - beta > 0", fourth, fourth > 0),
        InequalityCheck("A < 0", -A, A < 0),
        InequalityCheck("B < 0", -B, B < 0),
        InequalityCheck("c_effective > -n", c_eff + n, c_eff > -n),
    )
    if not all(ch.holds for ch in checks):
        raise AssertionError(f"certificate bug: in-region build produced failing checks {checks}")
    return SchurCertificate(
        case="1.1",
        params=params,
        c_effective=c_eff,
        A=A,
        B=B,
        gamma=gamma,
        delta=delta,
        epsilon=eps,
        checks=checks,
        exact=exact,
    )


def build_certificate_13(params: Params, epsilon: Number | None = None) -> SchurCertificate:
    """Materialize the case-1.3 Schur data at c_effective = critical - epsilon.

    epsilon defaults to half of min(n-1, (1/q-1/p)(1+beta),
    (p/(p-1))(1/q-1/p)(b+1-(1+alpha)/p)), additionally capped at
    critical - c so that c_effective >= c and monotonicity covers the request.
    """
    _require_case(params, "1.3")
    n, b, c, alpha, beta, p, q = _exactify(params)
    exact = params.exact
    crit = b + (1 + beta) / q - (1 + alpha) / p
    pprime = p / (p - 1)
    qprime = q / (q - 1)

    caps = (
        n - 1,
        (1 / q - 1 / p) * (1 + beta),
        (p / (p - 1)) * (1 / q - 1 / p) * (b + 1 - (1 + alpha) / p),
    )
    eps_user = crit - c
    eps = epsilon if epsilon is not None else min(min(caps) / 2, eps_user)
    if not (0 < eps < min(caps) and eps <= eps_user):
        raise CertificateRegionError(
            f"epsilon must lie in (0, {min(caps)}) and not exceed critical - c = {eps_user}"
        )
    c_eff = crit - eps

    A = ((p - 1) / p) * (-(1 + alpha) / p + eps * q / (p - q))
    B = ((q - 1) / q) * (-(1 + beta) / q + eps * p / (p - q))
    # cross-check against the direct solution of the 2x2 growth-matching system
    A_direct = (p - 1) * (q * (c_eff - b) + alpha - beta) / (p * (q - p))
    B_direct = (q - 1) * (p * (c_eff - b) + alpha - beta) / (q * (q - p))
    _check_consistency(A - A_direct, exact, "A solves the linear system")
    _check_consistency(B - B_direct, exact, "B solves the linear system")

    first = b + A * pprime
    second = B * q + beta
    third = c_eff - first
    fourth_val = c_eff - second
    double_exp = second - third  # power of (1-|y|^2) in the double integral
    _check_consistency(third - (-B * qprime), exact, "c - (b + A p') = -B q'")
    _check_consistency(fourth_val - (b - alpha) - (-A * p), exact, "c - (Bq+beta) - (b-alpha) = -A p")
    _check_consistency(double_exp - (-1 + eps * p * q / (p - q)), exact, "double-integral exponent")

    checks = (
        InequalityCheck("b + A p' > -1", first + 1, first > -1),
        InequalityCheck("B q + beta > -1", second + 1, second > -1),
        InequalityCheck("c - (b + A p') > 0", third, third > 0),
        InequalityCheck("c - (B q + beta) > 0", fourth_val, fourth_val > 0),
        InequalityCheck("double-integral exponent > -1", double_exp + 1, double_exp > -1),
        InequalityCheck("A < 0", -A, A < 0),
        InequalityCheck("B < 0", -B, B < 0),
        InequalityCheck("c_effective > -n", c_eff + n, c_eff > -n),
    )
    if not all(ch.holds for ch in checks):
        raise AssertionError(f"certificate bug: in-region build produced failing checks {checks}")
    return SchurCertificate(
        case="1.3",
        params=params,
        c_effective=c_eff,
        A=A,
        B=B,
        gamma=None,
        delta=None,
        epsilon=eps,
        checks=checks,
        exact=exact,
    )


# ---------------------------------------------------------------------------
# Numerical verification of the certified growth rates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchurBoundCheck:
    """One Schur inequality confirmed by quadrature: the weighted bracket
    integral grows like the promised test-function power."""

    name: str
    target_exponent: float
    fitted_exponent: float
    fitted_constant: float      # sup of integral / promised power along the ladder
    ratio_drift: float          # late-ladder relative drift of that ratio
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "target_exponent": self.target_exponent,
            "fitted_exponent": self.fitted_exponent,
            "fitted_constant": self.fitted_constant,
            "ratio_drift": self.ratio_drift,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class CertificateVerification:
    case: str
    bounds: tuple[SchurBoundCheck, ...]
    double_integral: float | None
    double_integral_drift: float | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "bounds": [b.to_json_dict() for b in self.bounds],
            "double_integral": self.double_integral,
            "double_integral_drift": self.double_integral_drift,
            "passed": self.passed,
        }


def _schur_bound_check(
    name: str,
    n: int,
    d: float,
    s_target: float,
    rungs: int = 10,
    exponent_tol: float = 0.1,
) -> SchurBoundCheck:
    """Check that int (1-|y|^2)^d / [x,y]^(n+d+s) d nu grows like (1-|x|^2)^(-s)."""
    ladder = geometric_radius_ladder(rungs, 0.5, 1.0 - 2.0**-9)
    values = bracket_power_integral_ladder(n, d, s_target, ladder)
    w_hat = extrapolated_power(ladder, values)
    u = 1.0 - ladder**2
    ratios = values * u**s_target
    constant = float(ratios.max())
    drift = abs(float(ratios[-1] / ratios[-3]) - 1.0)
    passed = abs(w_hat - s_target) <= exponent_tol and np.isfinite(constant)
    return SchurBoundCheck(
        name=name,
        target_exponent=float(s_target),
        fitted_exponent=float(w_hat),
        fitted_constant=constant,
        ratio_drift=drift,
        passed=passed,
    )


def verify_certificate_11(cert: SchurCertificate, rungs: int = 10) -> CertificateVerification:
    """Quadrature confirmation of the two case-1.1 Schur inequalities.

    The x-integral of the split kernel against the A-power test function
    must grow like the B-power at its argument, and symmetrically; both are
    weighted bracket integrals whose growth exponents are F2 and the fourth
    condition value, fitted against their targets.
    """
    if cert.case != "1.1":
        raise ValueError("certificate is not the 1.1 route")
    n = cert.params.n
    b, alpha, beta = (float(cert.params.b), float(cert.params.alpha), float(cert.params.beta))
    p = float(cert.params.p)
    q = float(cert.params.q)
    pprime = p / (p - 1.0)
    A, B = float(cert.A), float(cert.B)
    gamma, delta = float(cert.gamma), float(cert.delta)
    c = float(cert.c_effective)

    F1 = (b - alpha) * gamma * pprime + A * pprime + alpha
    F2 = (n + c) * gamma * pprime - n - F1
    s4 = (n + c) * delta * q - n - (B * q + beta)
    bounds = (
        _schur_bound_check("x-integral vs B-power", n, F1, F2, rungs),
        _schur_bound_check("y-integral vs A-power", n, B * q + beta, s4, rungs),
    )
    return CertificateVerification(
        case="1.1",
        bounds=bounds,
        double_integral=None,
        double_integral_drift=None,
        passed=all(bd.passed for bd in bounds),
    )


def double_integral_13(cert: SchurCertificate, radial_points: int = 150, inner_points: int = 180, angular_points: int = 224) -> float:
    """The case-1.3 double integral (V constants dropped):
    int (1-|y|^2)^(Bq+beta) [ int (1-|x|^2)^(b+Ap') / [x,y]^(n+c) d nu(x) ] d nu(y)."""
    n = cert.params.n
    b, alpha = float(cert.params.b), float(cert.params.alpha)
    p = float(cert.params.p)
    q = float(cert.params.q)
    beta = float(cert.params.beta)
    pprime = p / (p - 1.0)
    A, B = float(cert.A), float(cert.B)
    c = float(cert.c_effective)
    d_inner = b + A * pprime
    s_inner = c - d_inner
    d_outer = B * q + beta
    outer = radial_rule(n, d_outer, radial_points)
    inner_vals = bracket_power_integral_ladder(
        n, d_inner, s_inner, outer.nodes, inner_points, angular_points,
        one_minus_radii=outer.one_minus_nodes,
    )
    return float(outer.weights @ inner_vals)


def verify_certificate_13(cert: SchurCertificate, rungs: int = 10) -> CertificateVerification:
    """Quadrature confirmation of the three case-1.3 Schur bounds: the two
    single integrals match the promised powers and the double integral is
    finite under refinement."""
    if cert.case != "1.3":
        raise ValueError("certificate is not the 1.3 route")
    n = cert.params.n
    b, alpha, beta = (float(cert.params.b), float(cert.params.alpha), float(cert.params.beta))
    p, q = float(cert.params.p), float(cert.params.q)
    pprime = p / (p - 1.0)
    A, B = float(cert.A), float(cert.B)
    c = float(cert.c_effective)

    d1 = b + A * pprime
    s1 = c - d1                      # = -B q'
    d2 = B * q + beta
    s2 = c - d2                      # = (b - alpha) + (-A p)
    bounds = (
        _schur_bound_check("x-integral vs B-power", n, d1, s1, rungs),
        _schur_bound_check("y-integral vs A-power", n, d2, s2, rungs),
    )
    coarse = double_integral_13(cert, 120, 150, 192)
    fine = double_integral_13(cert, 180, 220, 256)
    drift = abs(fine - coarse) / abs(fine)
    passed = all(bd.passed for bd in bounds) and drift < 1e-3
    return CertificateVerification(
        case="1.3",
        bounds=bounds,
        double_integral=fine,
        double_integral_drift=drift,
        passed=passed,
    )


# ---------------------------------------------------------------------------
# J-function routes for the remaining cases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JFunctionReport:
    """Certified supremum of the case's J-function over the radius ladder."""

    case: str
    trichotomy: str
    trichotomy_value: float
    branch: str
    sup_j: float
    ladder_values: tuple[float, ...]
    stabilized: bool
    c_effective: float

    @property
    def verdict(self) -> str:
        return "bounded" if self.stabilized else "unstable"

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "trichotomy": self.trichotomy,
            "trichotomy_value": self.trichotomy_value,
            "branch": self.branch,
            "sup_j": self.sup_j,
            "ladder_values": list(self.ladder_values),
            "stabilized": self.stabilized,
            "verdict": self.verdict,
            "c_effective": self.c_effective,
        }


def _branch_of(value: float) -> str:
    if value < 0:
        return BOUNDED
    if value == 0:
        return LOGARITHMIC
    return POWER


def _running_sup_stabilized(values: np.ndarray, rel: float = 1e-3, decel: float = 0.9) -> bool:
    """Certify that the running sup of the ladder converges.

    Either it has already settled to relative precision rel, or its
    increments decay geometrically (block ratio below decel); constant
    increments per geometric rung are exactly the signature of a log-
    divergent J and fail the test.
    """
    sups = np.maximum.accumulate(values)
    if sups.size < 6:
        return False
    if abs(sups[-1] - sups[-4]) <= rel * abs(sups[-1]):
        return True
    inc = np.diff(sups)
    late = inc[-1] + inc[-2]
    early = inc[-3] + inc[-4]
    if early <= 0.0:
        return True
    return late / early <= decel


def _refinement_stabilized(values: list[float], rel: float = 1e-3) -> bool:
    return abs(values[-1] - values[-2]) <= rel * abs(values[-1])


def _lift_c(c: float, crit: float, inclusive: bool, n: int) -> float:
    """The proofs assume a kernel parameter above -n; smaller requests are
    certified at an in-region lift and carried down by monotonicity."""
    if c > -n:
        return c
    c_eff = crit if inclusive else crit - min(1.0, (crit + n)) / 2.0
    if not c_eff > -n:
        raise AssertionError("lifted parameter still at or below -n; region bug")
    return c_eff


J_ROUTE_CASES = ("1.2", "1.3q1", "1.4", "1.5", "1.6", "1.7")


def verify_J_route(case: str, params: Params, rungs: int = 8) -> JFunctionReport:
    """Certify sup J < inf for the direct-route case at in-region parameters.

    J is the weighted bracket integral (or supremum) the case's proof bounds;
    its branch follows the trichotomy parameter recorded in the report.
    """
    if case not in J_ROUTE_CASES:
        raise ValueError(f"case must be one of {J_ROUTE_CASES}")
    expected = "1.3" if case == "1.3q1" else case
    actual = theorem_case(params.p, params.q)
    if actual != expected or (case == "1.3q1" and params.q != 1):
        raise CertificateRegionError(f"(p, q) lies in case {actual}, not {case}")
    verdict = classify(params)
    if not verdict.bounded:
        raise CertificateRegionError("parameters violate the case's boundedness region")

    n = params.n
    b, c, alpha, beta = (float(params.b), float(params.c), float(params.alpha), float(params.beta))
    crit = float(verdict.critical_c)
    inclusive = verdict.boundary_included
    rungs = max(rungs, 14)
    ladder = geometric_radius_ladder(rungs, 0.5, 1.0 - 2.0**-14)

    if case == "1.2":
        q = float(params.q)
        c_eff = _lift_c(c, crit, inclusive, n)
        rho = (n + c_eff) * q - n - beta
        if rho == 0.0 and not alpha < b:
            raise AssertionError("log branch of case 1.2 requires alpha < b; region bug")
        inner = bracket_power_integral_ladder(n, beta, rho, ladder)
        values = (1.0 - ladder**2) ** (b - alpha) * inner ** (1.0 / q)
        return _ladder_report(case, "(n+c)q - n - beta", rho, values, c_eff)

    if case == "1.3q1":
        p = float(params.p)
        pprime = p / (p - 1.0)
        c_eff = _lift_c(c, crit, inclusive, n)
        tri = c_eff - beta
        outer_w = (b - alpha / p) * pprime
        levels = []
        for scale in (1.0, 1.4, 2.0):
            outer = radial_rule(n, outer_w, int(150 * scale))
            inner = bracket_power_integral_ladder(
                n, beta, c_eff - beta, outer.nodes, int(150 * scale), int(192 * scale),
                one_minus_radii=outer.one_minus_nodes,
            )
            levels.append(float(outer.weights @ inner**pprime))
        return _refinement_report(case, "c - beta", tri, levels, c_eff)

    if case == "1.4":
        p = float(params.p)
        pprime = p / (p - 1.0)
        c_eff = _lift_c(c, crit, inclusive, n)
        rho = pprime * (c_eff - b + (n + alpha) / p)
        if rho == 0.0 and not beta > 0:
            raise AssertionError("log branch of case 1.4 requires beta > 0; region bug")
        d_inner = (b - alpha) * pprime + alpha
        s_inner = (n + c_eff) * pprime - n - d_inner
        inner = bracket_power_integral_ladder(n, d_inner, s_inner, ladder)
        values = (1.0 - ladder**2) ** beta * inner ** (1.0 / pprime)
        return _ladder_report(case, "p'(c - b + (n+alpha)/p)", rho, values, c_eff)

    if case == "1.5":
        if alpha == b and beta == 0.0:
            # c < -n here: the kernel itself is bounded; certify sup |R_c|
            spec = KernelSpec.for_tolerance(n, c, 1e-9, rho_max=0.95 * 0.95)
            y_radii = np.linspace(0.0, 0.95, 25)
            cos_grid = np.cos(np.linspace(np.pi, 0.0, 33))
            values = np.empty(ladder.size)
            for i, r in enumerate(np.minimum(ladder, 0.95)):
                vals = series_matrix(spec, r * y_radii, cos_grid)
                values[i] = float(np.abs(vals).max())
            return _ladder_report(case, "kernel bounded (c < -n)", c - (-n), values, c)
        exponent = b - alpha + beta - (n + c)
        y_radii = geometric_radius_ladder(12, 0.3, 1.0 - 2.0**-10)
        cos_grid = np.cos(np.linspace(np.pi, 0.0, 49))
        values = np.empty(ladder.size)
        for i, r in enumerate(ladder):
            rho_grid = r * y_radii[:, None]
            br = np.sqrt(np.maximum(1.0 - 2.0 * rho_grid * cos_grid[None, :] + rho_grid**2, 0.0))
            jvals = (
                (1.0 - y_radii[:, None] ** 2) ** beta
                * (1.0 - r**2) ** (b - alpha)
                * br ** -(n + c)
            )
            values[i] = float(jvals.max())
        return _ladder_report(case, "b - alpha + beta - (n+c)", exponent, values, c, sup_route=True)

    if case == "1.6":
        q = float(params.q)
        c_eff = _lift_c(c, crit, inclusive, n)
        if q == 1.0:
            tri = c_eff - beta
            levels = []
            for scale in (1.0, 1.4, 2.0):
                outer = radial_rule(n, b - alpha, int(150 * scale))
                inner = bracket_power_integral_ladder(
                    n, beta, c_eff - beta, outer.nodes, int(150 * scale), int(192 * scale)
                )
                levels.append(float(outer.weights @ inner))
            return _refinement_report(case, "c - beta", tri, levels, c_eff)
        tri = c_eff - b + alpha
        levels = []
        for scale in (1.0, 1.4, 2.0):
            outer = radial_rule(n, beta, int(150 * scale))
            inner = bracket_power_integral_ladder(
                n, b - alpha, c_eff - b + alpha, outer.nodes, int(150 * scale), int(192 * scale),
                one_minus_radii=outer.one_minus_nodes,
            )
            levels.append(float(outer.weights @ inner**q))
        return _refinement_report(case, "c - b + alpha", tri, levels, c_eff)

    # case 1.7
    c_eff = _lift_c(c, crit, inclusive, n)
    tri = c_eff - b + alpha
    if tri == 0.0 and not beta > 0:
        raise AssertionError("log branch of case 1.7 requires beta > 0; region bug")
    inner = bracket_power_integral_ladder(n, b - alpha, c_eff - b + alpha, ladder)
    values = (1.0 - ladder**2) ** beta * inner
    return _ladder_report(case, "c - b + alpha", tri, values, c_eff)


def _ladder_report(
    case: str,
    trichotomy: str,
    value: float,
    values: np.ndarray,
    c_eff: float,
    sup_route: bool = False,
) -> JFunctionReport:
    branch = "kernel-bounded" if trichotomy.startswith("kernel") else (
        _branch_of(value) if not sup_route else (BOUNDED if value >= 0 else POWER)
    )
    stabilized = _running_sup_stabilized(values)
    return JFunctionReport(
        case=case,
        trichotomy=trichotomy,
        trichotomy_value=float(value),
        branch=branch,
        sup_j=float(np.max(values)),
        ladder_values=tuple(float(v) for v in values),
        stabilized=stabilized,
        c_effective=float(c_eff),
    )


def _refinement_report(
    case: str, trichotomy: str, value: float, levels: list[float], c_eff: float
) -> JFunctionReport:
    return JFunctionReport(
        case=case,
        trichotomy=trichotomy,
        trichotomy_value=float(value),
        branch=_branch_of(value),
        sup_j=float(levels[-1]),
        ladder_values=tuple(levels),
        stabilized=_refinement_stabilized(levels),
        c_effective=float(c_eff),
    )
