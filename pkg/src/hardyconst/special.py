"""The decreasing polynomial H_r and its inverse omega_r.

For an exponent r > 1,

    H_r(z) = -(r-1) z^r + r z^(r-1) = z^(r-1) * (r - (r-1) z)

decreases strictly from H_r(1) = 1 to H_r(r') = 0 on the bracket [1, r'],
where r' = r/(r-1) is the Hoelder conjugate of r.  Its inverse

    omega_r : [0, 1] -> [1, r']

underpins everything else in this package.  Inversion uses a safeguarded
Newton iteration: a Newton step is accepted only while it stays inside the
current sign-change bracket, otherwise the step is replaced by bisection,
which guarantees termination.  H_r is smooth and strictly monotone on the
bracket, so Newton converges quadratically once close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, SingularityError

_MAX_NEWTON_ITER = 200
_STEP_TOL = 1e-15
_BRACKET_TOL = 1e-15


def conjugate(r: float) -> float:
    """Hoelder conjugate r/(r-1); the right endpoint of omega_r's range."""
    _check_exponent(r)
    return r / (r - 1.0)


@dataclass(frozen=True)
class Exponents:
    """A validated exponent pair with 1 < q < p, threaded through the library."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and math.isfinite(self.q)):
            raise DomainError("exponents must be finite")
        if not 1.0 < self.q < self.p:
            raise DomainError(
                f"exponents must satisfy 1 < q < p, got p={self.p}, q={self.q}"
            )

    @property
    def p_conj(self) -> float:
        """p/(p-1), the upper endpoint of the constant's range."""
        return self.p / (self.p - 1.0)

    @property
    def q_conj(self) -> float:
        """q/(q-1), the upper endpoint of omega_q's range."""
        return self.q / (self.q - 1.0)


def _check_exponent(r: float) -> None:
    if not (math.isfinite(r) and r > 1.0):
        raise DomainError(f"exponent must be finite and > 1, got {r}")


def h_eval(r: float, z: float) -> float:
    """Evaluate H_r(z) = -(r-1) z^r + r z^(r-1) on the bracket [1, r/(r-1)].

    The factored form z^(r-1) * (r - (r-1) z) keeps the value in [0, 1]
    without cancellation; a strayed last-bit negative at the right endpoint
    is clamped to 0.
    """
    _check_exponent(r)
    top = r / (r - 1.0)
    if not 1.0 <= z <= top:
        raise DomainError(f"H_{r} is only used on [1, {top}], got z={z}")
    val = z ** (r - 1.0) * (r - (r - 1.0) * z)
    if -1e-13 < val < 0.0:
        return 0.0
    return val


def h_deriv(r: float, z: float) -> float:
    """Derivative H_r'(z) = r (r-1) z^(r-2) (1 - z); <= 0 on the bracket."""
    _check_exponent(r)
    top = r / (r - 1.0)
    if not 1.0 <= z <= top:
        raise DomainError(f"H_{r}' is only used on [1, {top}], got z={z}")
    return r * (r - 1.0) * z ** (r - 2.0) * (1.0 - z)


def omega(r: float, s: float) -> float:
    """Invert H_r: the unique z in [1, r/(r-1)] with H_r(z) = s.

    Endpoints are short-circuited to the exact closed-form values
    omega_r(1) = 1 and omega_r(0) = r/(r-1); this avoids the Newton
    stall at z = 1 where H_r' vanishes.
    """
    _check_exponent(r)
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"omega_{r} is defined on [0, 1], got s={s}")
    top = r / (r - 1.0)
    if s == 1.0:
        return 1.0
    if s == 0.0:
        return top

    lo, hi = 1.0, top
    # Near s = 1 the root behaves like 1 + sqrt(2(1-s)/(r(r-1))); blending
    # that with the s = 0 endpoint gives a guess good to a few percent.
    z = 1.0 + (top - 1.0) * math.sqrt(1.0 - s)
    z = min(max(z, lo), hi)
    for _ in range(_MAX_NEWTON_ITER):
        f = h_eval(r, z) - s
        if f > 0.0:  # H decreasing: H(z) > s means z is left of the root
            lo = z
        elif f < 0.0:
            hi = z
        else:
            return z
        d = h_deriv(r, z)
        z_new = z - f / d if d != 0.0 else 0.5 * (lo + hi)
        if not lo < z_new < hi:
            z_new = 0.5 * (lo + hi)
        step = abs(z_new - z)
        z = z_new
        if hi - lo <= _BRACKET_TOL or step <= _STEP_TOL * z:
            return min(max(z, 1.0), top)
    raise ConvergenceError(
        f"omega({r}, {s}) did not converge in {_MAX_NEWTON_ITER} iterations"
    )


def omega_deriv(r: float, s: float) -> float:
    """d/ds omega_r(s) = 1 / H_r'(omega_r(s)); strictly negative on (0, 1).

    Blows up like -1/sqrt(1-s) as s -> 1 because H_r' vanishes at z = 1,
    so both endpoints are rejected.
    """
    _check_exponent(r)
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"omega_{r}' is defined on (0, 1), got s={s}")
    if s == 0.0 or s == 1.0:
        raise SingularityError(f"omega_{r}' is singular at s={s}")
    return 1.0 / h_deriv(r, omega(r, s))
