"""Root solve for the sharp constant t(s1, s2).

On the admissible region the constant t = t(s1, s2) in (1, p/(p-1)) is
characterized implicitly by

    q * (p*w^(q-1) - (p-1)*w^q) * (t^(p-q) - s1/s2) = (p-q) * s1 * alpha(s2)

with w = omega_q(tau),

    tau(t)    = ((p-q)/p) * (t^p - s1) / (t^(p-q) - s1/s2),
    alpha(s2) = omega_q(s2)^q / s2 - 1.

``residual`` is the left side minus the right side.  Structure exploited by
the solver: tau is strictly increasing in t (its t-derivative is a positive
multiple of lambda(t) = q t^p - p t^q s1/s2 + (p-q) s1 > 0), so the region
where the left factor p*w^(q-1) - (p-1)*w^q is positive, i.e. where
tau > H_q(p/(p-1)), is an upper t-interval; the residual is strictly
negative below it and strictly increasing on it, so there is at most one
root.  The bracket scan below nevertheless keeps the last sign change it
sees, which selects the greatest root by construction if that reasoning is
ever defeated numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import Membership, ParamPoint, in_domain
from .errors import (
    ConvergenceError,
    DomainError,
    InfeasibleTauError,
    NoRootError,
    OutsideDomainError,
    SingularityError,
)
from .special import Exponents, omega

#: margin by which the scan bracket stays inside the open interval (1, p/(p-1))
_ENDPOINT_MARGIN = 1e-12
#: number of equal scan cells used to locate a sign change
_SCAN_CELLS = 64
#: final root-bracket width
_BRACKET_WIDTH = 1e-13
_MAX_REFINE_ITER = 200


@dataclass(frozen=True)
class BellmanSolution:
    """A solved constant together with its certificates.

    t             the constant, in (1, p/(p-1))
    tau           the reparameterized argument fed to omega_q, in (0, 1)
    omega_q_tau   omega_q(tau)
    residual      implicit-equation residual at t (left minus right side)
    bracket_width width of the final root bracket containing t
    """

    t: float
    tau: float
    omega_q_tau: float
    residual: float
    bracket_width: float


def tau_eval(e: Exponents, pt: ParamPoint, t: float) -> float:
    """tau(t) = ((p-q)/p) * (t^p - s1) / (t^(p-q) - s1/s2) for t >= 1."""
    if not (math.isfinite(t) and t >= 1.0):
        raise DomainError(f"tau is evaluated for t >= 1, got t={t}")
    denom = t ** (e.p - e.q) - pt.s1 / pt.s2
    if denom <= 0.0:
        raise SingularityError(
            f"tau denominator t^(p-q) - s1/s2 = {denom} is not positive"
        )
    return (e.p - e.q) / e.p * (t**e.p - pt.s1) / denom


def alpha_eval(e: Exponents, s2: float) -> float:
    """alpha(s2) = omega_q(s2)^q / s2 - 1; strictly positive on (0, 1)."""
    if not (math.isfinite(s2) and 0.0 < s2 < 1.0):
        raise DomainError(f"alpha needs s2 in (0, 1), got {s2}")
    return omega(e.q, s2) ** e.q / s2 - 1.0


def residual(e: Exponents, pt: ParamPoint, t: float) -> float:
    """Implicit-equation residual at t; zero exactly at the constant."""
    return _residual_given_alpha(e, pt, t, alpha_eval(e, pt.s2))


def _residual_given_alpha(e: Exponents, pt: ParamPoint, t: float, a2: float) -> float:
    tau = tau_eval(e, pt, t)
    if not 0.0 <= tau <= 1.0:
        raise InfeasibleTauError(
            f"tau={tau} left [0, 1] at t={t}; omega_q is undefined there"
        )
    w = omega(e.q, tau)
    lhs = (
        e.q
        * (e.p * w ** (e.q - 1.0) - (e.p - 1.0) * w**e.q)
        * (t ** (e.p - e.q) - pt.s1 / pt.s2)
    )
    return lhs - (e.p - e.q) * pt.s1 * a2


def _tau_feasible_top(e: Exponents, pt: ParamPoint, lo: float, hi: float) -> float:
    """Largest t in [lo, hi] with tau(t) <= 1 (tau is increasing in t)."""
    if tau_eval(e, pt, hi) <= 1.0:
        return hi
    if tau_eval(e, pt, lo) > 1.0:
        raise NoRootError(
            f"tau exceeds 1 on the whole bracket at (s1={pt.s1}, s2={pt.s2})"
        )
    a, b = lo, hi
    for _ in range(_MAX_REFINE_ITER):
        mid = 0.5 * (a + b)
        if tau_eval(e, pt, mid) <= 1.0:
            a = mid
        else:
            b = mid
        if b - a <= _BRACKET_WIDTH:
            break
    return a


def solve_t(e: Exponents, pt: ParamPoint) -> BellmanSolution:
    """Solve the implicit equation for the constant at an interior point.

    Scans [1 + eps, p/(p-1) - eps] (truncated to the t-interval where tau
    stays in [0, 1]) in equal cells for a sign change of the residual, takes
    the rightmost one, and refines it with a bisection-safeguarded secant
    iteration until the bracket is narrower than 1e-13.  Of all residual
    evaluations inside the final bracket, the t with the smallest |residual|
    is returned, which in practice lands within a few ulp of the root.

    Raises OutsideDomainError unless in_domain(...) is INSIDE, and
    NoRootError when the residual has no sign change (an operationally
    excluded point beyond the admissible region's upper-left cutoff).
    """
    verdict = in_domain(e, pt)
    if verdict is not Membership.INSIDE:
        raise OutsideDomainError(
            f"({pt.s1}, {pt.s2}) is {verdict.value} for p={e.p}, q={e.q}"
        )
    a2 = alpha_eval(e, pt.s2)
    lo = 1.0 + _ENDPOINT_MARGIN
    hi = e.p_conj - _ENDPOINT_MARGIN
    hi = _tau_feasible_top(e, pt, lo, hi)

    def f(t: float) -> float:
        return _residual_given_alpha(e, pt, t, a2)

    ts = [float(t) for t in np.linspace(lo, hi, _SCAN_CELLS + 1)]
    vals = [f(t) for t in ts]
    bracket = None
    for i in range(_SCAN_CELLS):
        if vals[i] == 0.0:
            return _certify(e, pt, ts[i], 0.0)
        if vals[i] * vals[i + 1] < 0.0:
            bracket = (ts[i], ts[i + 1], vals[i], vals[i + 1])
    if vals[-1] == 0.0:
        return _certify(e, pt, ts[-1], 0.0)
    if bracket is None:
        raise NoRootError(
            f"residual has no sign change in ({lo}, {hi}) at "
            f"(s1={pt.s1}, s2={pt.s2}); point is operationally outside"
        )

    a, b, fa, fb = bracket
    best_t, best_f = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    prev_width = b - a
    for k in range(_MAX_REFINE_ITER):
        width = b - a
        if width <= _BRACKET_WIDTH:
            break
        # Secant candidate, pushed to the midpoint whenever it leaves the
        # bracket interior or the previous round failed to halve the bracket.
        use_bisect = k >= 2 and width > 0.5 * prev_width
        prev_width = width
        if not use_bisect and fb != fa:
            c = b - fb * (b - a) / (fb - fa)
            if not a + 0.01 * width < c < b - 0.01 * width:
                c = 0.5 * (a + b)
        else:
            c = 0.5 * (a + b)
        fc = f(c)
        if abs(fc) < abs(best_f):
            best_t, best_f = c, fc
        if fc == 0.0:
            a = b = c
            break
        if fa * fc < 0.0:
            b, fb = c, fc
        else:
            a, fa = c, fc
    else:
        raise ConvergenceError("root refinement exceeded its iteration cap")

    if not a <= best_t <= b:
        best_t, best_f = 0.5 * (a + b), f(0.5 * (a + b))
    return _certify(e, pt, best_t, b - a)


def _certify(e: Exponents, pt: ParamPoint, t: float, width: float) -> BellmanSolution:
    tau = tau_eval(e, pt, t)
    return BellmanSolution(
        t=t,
        tau=tau,
        omega_q_tau=omega(e.q, tau),
        residual=residual(e, pt, t),
        bracket_width=width,
    )
