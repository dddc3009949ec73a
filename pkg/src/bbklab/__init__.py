"""Numerical laboratory for harmonic Bergman-Besov kernels, the weighted
integral operators they induce on the unit ball of R^n, and the exact
six-parameter boundedness classifier with its verification suites."""

from .geometry import BallPoint, WeightedMeasure, bracket, radial_rule, v_alpha, zonal_rule
from .kernel import KernelSpec, kernel_eval, tail_budget
from .specfun import gamma_k, gegenbauer, pochhammer

__all__ = [
    "BallPoint",
    "KernelSpec",
    "WeightedMeasure",
    "bracket",
    "gamma_k",
    "gegenbauer",
    "kernel_eval",
    "pochhammer",
    "radial_rule",
    "tail_budget",
    "v_alpha",
    "zonal_rule",
]
