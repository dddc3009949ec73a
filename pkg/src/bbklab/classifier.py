"""Exact boundedness classifier for the weighted kernel operators.

Given (n, b, c, alpha, beta, p, q) with p, q in [1, inf], decides whether
the operators T/S with kernel parameter c and weight power b map the
p-class of nu_alpha boundedly into the q-class of nu_beta (the damped
sup-norm class when the exponent is inf).  The (p, q) square splits into
seven regimes, labeled 1.1-1.7:

    1.1: 1 < p <= q < inf      alpha+1 < p(b+1),  c <= b + (n+beta)/q - (n+alpha)/p
    1.2: 1 = p <= q < inf      alpha < b and c <= K, or alpha <= b and c < K,
                               K = b + (n+beta)/q - (n+alpha)
    1.3: 1 <= q < p < inf      alpha+1 < p(b+1),  c < b + (1+beta)/q - (1+alpha)/p
    1.4: 1 < p < inf, q = inf  alpha+1 < p(b+1),  c <= b + beta - (n+alpha)/p,
                               strict when beta = 0
    1.5: p = 1, q = inf        alpha < b and c <= K, or alpha <= b and c < K,
                               K = b + beta - (n+alpha)
    1.6: p = inf, 1 <= q < inf alpha-1 < b,  c < b + (beta+1)/q - alpha
    1.7: p = q = inf           alpha-1 < b,  c <= b + beta - alpha, strict when beta = 0

with the prerequisite beta > -1 for q < inf and beta >= 0 for q = inf
(the image consists of harmonic functions, which admit no finite q-norm
against weights at or below those cutoffs).

Comparisons are exact: Fraction inputs are decided in rational arithmetic,
floats with zero tolerance.  Infinity is a first-class exponent value; no
formula ever divides by it (the regime split happens first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, float, Fraction]

INF = math.inf

SEAM_TOLERANCE = 1e-12


def is_exact(x: Number) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _validate_exponent(value: Number, name: str) -> None:
    if value == INF:
        return
    if not value >= 1:
        raise ValueError(f"{name} must satisfy {name} >= 1 (inf allowed), got {value}")


@dataclass(frozen=True)
class Params:
    """The classifier input: dimension n plus the six-tuple (b, c, alpha, beta, p, q)."""

    n: int
    b: Number
    c: Number
    alpha: Number
    beta: Number
    p: Number
    q: Number

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be an integer >= 2")
        _validate_exponent(self.p, "p")
        _validate_exponent(self.q, "q")

    @property
    def exact(self) -> bool:
        exponents_exact = all(x == INF or is_exact(x) for x in (self.p, self.q))
        return exponents_exact and all(is_exact(x) for x in (self.b, self.c, self.alpha, self.beta))

    def with_c(self, c: Number) -> "Params":
        return Params(self.n, self.b, c, self.alpha, self.beta, self.p, self.q)


@dataclass(frozen=True)
class Condition:
    description: str
    holds: bool


@dataclass(frozen=True)
class Verdict:
    """Classifier output; bounded = prerequisite_ok and all conditions hold."""

    bounded: bool
    theorem: str
    prerequisite_ok: bool
    conditions: tuple[Condition, ...]
    critical_c: Number
    margin: Number              # critical_c - c
    boundary_included: bool
    exact_arithmetic: bool
    seam_flag: bool

    def to_json_dict(self) -> dict:
        return {
            "bounded": self.bounded,
            "theorem": self.theorem,
            "prerequisite_ok": self.prerequisite_ok,
            "conditions": [
                {"description": c.description, "holds": c.holds} for c in self.conditions
            ],
            "critical_c": format_number(self.critical_c),
            "margin": format_number(self.margin),
            "boundary_included": self.boundary_included,
            "exact_arithmetic": self.exact_arithmetic,
            "seam_flag": self.seam_flag,
        }


def format_number(x: Number) -> str:
    """Stable text form: Fractions as a/b, floats via repr, inf as 'inf'."""
    if x == INF:
        return "inf"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    return repr(float(x))


def theorem_case(p: Number, q: Number) -> str:
    """The regime label; the seven predicates tile [1, inf]^2."""
    if q == INF:
        if p == INF:
            return "1.7"
        if p == 1:
            return "1.5"
        return "1.4"
    if p == INF:
        return "1.6"
    if p == 1:
        return "1.2"
    if p <= q:
        return "1.1"
    return "1.3"


def _near(x: Number, target: Number) -> bool:
    if x == INF or x == target:
        return False
    return abs(float(x) - float(target)) < SEAM_TOLERANCE


def _seam_flag(params: Params, critical: Number) -> bool:
    p, q = params.p, params.q
    near_seam = (
        _near(p, 1) or _near(q, 1)
        or (p != INF and q != INF and p != q and abs(float(p) - float(q)) < SEAM_TOLERANCE)
        or _near(params.beta, 0) or _near(params.beta, -1)
        or _near(params.c, critical)
    )
    return bool(near_seam)


def classify(params: Params) -> Verdict:
    """Decide boundedness, reporting the governing case and each condition."""
    n, b, c, alpha, beta = params.n, params.b, params.c, params.alpha, params.beta
    p, q = params.p, params.q
    if params.exact:
        # keep integer inputs exact: Python's / on ints produces floats
        b, c, alpha, beta = Fraction(b), Fraction(c), Fraction(alpha), Fraction(beta)
        p = p if p == INF else Fraction(p)
        q = q if q == INF else Fraction(q)
    case = theorem_case(p, q)

    if q == INF:
        prerequisite_ok = beta >= 0
    else:
        prerequisite_ok = beta > -1

    conditions: list[Condition]
    if case == "1.1":
        critical = b + (n + beta) / q - (n + alpha) / p
        boundary_included = True
        conditions = [
            Condition("alpha + 1 < p(b + 1)", alpha + 1 < p * (b + 1)),
            Condition("c <= b + (n+beta)/q - (n+alpha)/p", c <= critical),
        ]
    elif case == "1.2":
        critical = b + (n + beta) / q - (n + alpha)
        boundary_included = alpha < b
        conditions = [
            Condition("alpha <= b", alpha <= b),
            Condition("c <= b + (n+beta)/q - (n+alpha)", c <= critical),
            Condition(
                "not both alpha = b and c = critical",
                not (alpha == b and c == critical),
            ),
        ]
    elif case == "1.3":
        critical = b + (1 + beta) / q - (1 + alpha) / p
        boundary_included = False
        conditions = [
            Condition("alpha + 1 < p(b + 1)", alpha + 1 < p * (b + 1)),
            Condition("c < b + (1+beta)/q - (1+alpha)/p", c < critical),
        ]
    elif case == "1.4":
        critical = b + beta - (n + alpha) / p
        boundary_included = beta > 0
        conditions = [
            Condition("alpha + 1 < p(b + 1)", alpha + 1 < p * (b + 1)),
            Condition(
                "c <= b + beta - (n+alpha)/p" if boundary_included
                else "c < b + beta - (n+alpha)/p (strict at beta = 0)",
                c <= critical if boundary_included else c < critical,
            ),
        ]
    elif case == "1.5":
        critical = b + beta - (n + alpha)
        boundary_included = alpha < b
        conditions = [
            Condition("alpha <= b", alpha <= b),
            Condition("c <= b + beta - (n+alpha)", c <= critical),
            Condition(
                "not both alpha = b and c = critical",
                not (alpha == b and c == critical),
            ),
        ]
    elif case == "1.6":
        critical = b + (beta + 1) / q - alpha
        boundary_included = False
        conditions = [
            Condition("alpha - 1 < b", alpha - 1 < b),
            Condition("c < b + (beta+1)/q - alpha", c < critical),
        ]
    else:  # 1.7
        critical = b + beta - alpha
        boundary_included = beta > 0
        conditions = [
            Condition("alpha - 1 < b", alpha - 1 < b),
            Condition(
                "c <= b + beta - alpha" if boundary_included
                else "c < b + beta - alpha (strict at beta = 0)",
                c <= critical if boundary_included else c < critical,
            ),
        ]

    bounded = bool(prerequisite_ok) and all(cond.holds for cond in conditions)
    return Verdict(
        bounded=bounded,
        theorem=case,
        prerequisite_ok=bool(prerequisite_ok),
        conditions=tuple(conditions),
        critical_c=critical,
        margin=critical - c,
        boundary_included=bool(boundary_included),
        exact_arithmetic=params.exact,
        seam_flag=_seam_flag(params, critical),
    )


def monotone_in_c_check(params: Params, c_smaller: Number) -> bool:
    """Truth of: bounded at c implies bounded at the smaller c."""
    if not c_smaller < params.c:
        raise ValueError("c_smaller must be strictly below params.c")
    if not classify(params).bounded:
        return True
    return classify(params.with_c(c_smaller)).bounded


@dataclass(frozen=True)
class AtlasRow:
    params: Params
    verdict: Verdict

    @property
    def critical_c(self) -> Number:
        return self.verdict.critical_c

    @property
    def margin(self) -> Number:
        return self.verdict.margin


def boundary_atlas(params_grid) -> list[AtlasRow]:
    """Verdicts plus critical-value geometry for each tuple of a finite grid."""
    return [AtlasRow(params=p, verdict=classify(p)) for p in params_grid]
