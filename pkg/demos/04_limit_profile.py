"""What happens as s1 -> 0: the limit profile F(s2) and its helper G(s2).

gamma(s1, s2) tends to F(s2) = (omega_q(s2)^q - a)/s2 - 1 + (p-1)/(q-1)
as s1 -> 0.  Below the threshold H_q(p/(p-1)) the profile is negative and
strictly increasing; its derivative is (a - G(s2))/s2^2 and G hits a
exactly at the threshold, so F' -> 0 there.
"""

import numpy as np

from hardyconst import (
    Exponents,
    ParamPoint,
    big_f,
    big_f_deriv,
    big_g,
    endgame_constants,
    gamma_eval,
    solve_t,
)

e = Exponents(2.0, 1.5)
c = endgame_constants(e)
print(f"p = {e.p}, q = {e.q}:")
print(f"  a              = {c.a:.15f}")
print(f"  threshold      = {c.threshold:.15f}")
print(f"  F(threshold)   = {big_f(e, c.threshold):.15f}"
      f"   (closed form {c.f_at_threshold})")
print(f"  G(threshold)   = {big_g(e, c.threshold):.15f}   (equals a)")
print(f"  (q/(q-1))^q    = {(e.q / (e.q - 1))**e.q:.15f}   (strictly below a)\n")

print("F is negative and rising below the threshold, diverging at 0:")
for s2 in (0.01, 0.1, 0.3, 0.5, 0.7, c.threshold):
    print(f"  F({s2:.4f}) = {big_f(e, s2):12.6f}    F'({s2:.4f}) = {big_f_deriv(e, s2):12.6f}")

print("\ngamma at s1 = 1e-8 sits on the profile for every s2, above or")
print("below the threshold:")
for s2 in (0.3, 0.5, 0.65, 0.8, 0.9):
    pt = ParamPoint(1e-8, s2)
    g = gamma_eval(e, pt, solve_t(e, pt))
    print(f"  s2 = {s2}: gamma = {g:12.8f}   F(s2) = {big_f(e, s2):12.8f}")

print("\nG is strictly increasing on (0, 1) and blows up at 1:")
for s2 in np.linspace(0.1, 0.9, 5):
    print(f"  G({s2:.2f}) = {big_g(e, float(s2)):10.5f}")
print(f"  G(0.999999) = {big_g(e, 0.999999):.3e}")
