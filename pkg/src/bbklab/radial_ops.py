"""Radial differential operators on truncated homogeneous expansions.

A function is represented as a finite zonal-anchored expansion
f(x) = sum_k c_k Z_k(x, eta).  The operator of order t based at s acts as
the spectral multiplier

    D_s^t:  c_k  ->  c_k * gamma_k(s+t) / gamma_k(s),

which is exact on this representation, and I_s^t f(x) = (1-|x|^2)^t D_s^t f(x).
The identities verified here: D_(s+t)^(-t) D_s^t = I, D_(s+t)^z D_s^t = D_s^(z+t),
and the kernel shift sending the parameter-s kernel to the parameter-(s+t) one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import as_vector
from .kernel import KernelSpec, kernel_eval, tail_budget
from .specfun import log_gamma_k_sequence
from .zonal import zonal_angular_matrix


@dataclass(frozen=True)
class Expansion:
    """f(x) = sum_(k=0..K) coeffs[k] Z_k(x, anchor), anchor a unit vector."""

    n: int
    anchor: np.ndarray
    coeffs: np.ndarray = field(default_factory=lambda: np.array([1.0]))

    def __post_init__(self):
        anchor = np.asarray(self.anchor, dtype=float)
        norm = np.linalg.norm(anchor)
        if norm == 0.0:
            raise ValueError("anchor must be a nonzero direction")
        anchor = anchor / norm
        anchor.flags.writeable = False
        coeffs = np.asarray(self.coeffs, dtype=float).copy()
        coeffs.flags.writeable = False
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def evaluate(self, x) -> float:
        xv = as_vector(x)
        r = float(np.linalg.norm(xv))
        if r == 0.0:
            return float(self.coeffs[0])
        t = float(np.clip(xv @ self.anchor / r, -1.0, 1.0))
        ang = zonal_angular_matrix(self.n, self.degree, np.array([t]))[:, 0]
        return float(self.coeffs @ (ang * r ** np.arange(self.degree + 1)))


def d_multipliers(n: int, s: float, t: float, k_max: int) -> np.ndarray:
    """gamma_k(s+t)/gamma_k(s) for k = 0..k_max."""
    return np.exp(
        log_gamma_k_sequence(n, s + t, k_max) - log_gamma_k_sequence(n, s, k_max)
    )


def apply_D(s: float, t: float, f: Expansion) -> Expansion:
    """Multiply coefficient k by gamma_k(s+t)/gamma_k(s); t = 0 is the identity."""
    if t == 0.0:
        return f
    mult = d_multipliers(f.n, s, t, f.degree)
    return Expansion(n=f.n, anchor=f.anchor, coeffs=f.coeffs * mult)


def apply_I(s: float, t: float, f: Expansion, x) -> float:
    """(1-|x|^2)^t times the order-t derivative of f at x."""
    xv = as_vector(x)
    r2 = float(xv @ xv)
    return (1.0 - r2) ** t * apply_D(s, t, f).evaluate(xv)


def verify_inverse(s: float, t: float, f: Expansion) -> float:
    """Max coefficient deviation of the two-sided inverse composition."""
    left = apply_D(s + t, -t, apply_D(s, t, f))
    right = apply_D(s, t, apply_D(s + t, -t, f))
    return float(
        max(
            np.max(np.abs(left.coeffs - f.coeffs)),
            np.max(np.abs(right.coeffs - f.coeffs)),
        )
    )


def verify_additivity(s: float, t: float, z: float, f: Expansion) -> float:
    """Max coefficient deviation of composing orders t then z against order z+t."""
    composed = apply_D(s + t, z, apply_D(s, t, f))
    direct = apply_D(s, z + t, f)
    return float(np.max(np.abs(composed.coeffs - direct.coeffs)))


def kernel_slice_expansion(n: int, s: float, x, k_max: int) -> Expansion:
    """The y-anchored expansion of y -> R_s(x, y): coefficients gamma_k(s) |x|^k
    against the anchor x/|x|."""
    xv = as_vector(x)
    r = float(np.linalg.norm(xv))
    if r == 0.0:
        raise ValueError("x = 0 gives the constant expansion; no anchor direction")
    gammas = np.exp(log_gamma_k_sequence(n, s, k_max))
    coeffs = gammas * r ** np.arange(k_max + 1)
    return Expansion(n=n, anchor=xv, coeffs=coeffs)


def verify_kernel_shift(s: float, t: float, x, y, tol: float = 1e-6) -> float:
    """|D_s^t applied to the y-slice of the parameter-s kernel, minus the
    parameter-(s+t) kernel at (x, y)|.

    Both sides are truncated at the k_max certified for the larger tail.
    """
    xv, yv = as_vector(x), as_vector(y)
    n = xv.size
    rho = float(np.linalg.norm(xv) * np.linalg.norm(yv))
    if rho == 0.0:
        return abs(1.0 - 1.0)
    series_tol = tol / 10.0
    k_max = max(
        tail_budget(n, s, rho, series_tol),
        tail_budget(n, s + t, rho, series_tol),
    )
    shifted = apply_D(s, t, kernel_slice_expansion(n, s, xv, k_max))
    lhs = shifted.evaluate(yv)
    spec = KernelSpec(n=n, alpha=float(s + t), k_max=k_max, tol=series_tol, rho_max=rho)
    rhs = kernel_eval(spec, xv, yv)
    return abs(lhs - rhs)
