"""Walk through the inverse-function layer that everything else builds on.

H_r(z) = -(r-1) z^r + r z^(r-1) decreases from 1 to 0 on [1, r/(r-1)], and
omega_r inverts it.  For r = 2 the inverse has the closed form
1 + sqrt(1 - s), which makes a handy independent check.
"""

import math

import numpy as np

from hardyconst import conjugate, h_deriv, h_eval, omega, omega_deriv

print("The bracket [1, r/(r-1)] for a few exponents:")
for r in (1.3, 1.5, 2.0, 3.0, 5.0):
    print(f"  r = {r}: omega_{r} maps [0, 1] onto [1, {conjugate(r):.6f}]")

print("\nH_2 and its inverse at a few points:")
for s in (0.0, 0.25, 0.5, 0.75, 1.0):
    z = omega(2.0, s)
    print(
        f"  s = {s:4}:  omega_2(s) = {z:.15f}"
        f"   closed form {1 + math.sqrt(1 - s):.15f}"
        f"   H_2(omega_2(s)) = {h_eval(2.0, z):.15f}"
    )

print("\nWorst round-trip error |H_r(omega_r(s)) - s| over 10_000 points:")
for r in (1.3, 1.5, 2.0, 3.0, 5.0):
    worst = max(
        abs(h_eval(r, omega(r, float(s))) - float(s))
        for s in np.linspace(0.0, 1.0, 10_000)
    )
    print(f"  r = {r}: {worst:.3e}")

print("\nThe derivative omega_r'(s) = 1/H_r'(omega_r(s)) blows up near s = 1")
print("because H_r' vanishes at z = 1:")
for s in (0.5, 0.9, 0.99, 0.999):
    print(f"  omega_2'({s}) = {omega_deriv(2.0, s):12.4f}"
          f"   (exact: {-1 / (2 * math.sqrt(1 - s)):12.4f})")

print("\nh_deriv is the slope of H itself, zero only at z = 1:")
for z in (1.0, 1.2, 1.5, 2.0):
    print(f"  H_2'({z}) = {h_deriv(2.0, z):8.4f}")
