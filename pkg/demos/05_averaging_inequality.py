"""The inequality itself: int ((1/t) int_0^t h)^p dt <= t(s1, s2)^p int h^p.

A worked two-step example with every number in closed form, then a seeded
random batch, then the rearrangement story: the averaging functional only
grows when h is sorted to be nonincreasing, and the inequality holds either
way.
"""

import math

from hardyconst import (
    Exponents,
    StepFunction,
    decreasing_rearrangement,
    hardy_lhs,
    moments_to_params,
    sample_step,
    step_moments,
    verify_hardy,
)

e = Exponents(2.0, 1.5)

print("h = 2 on (0, 1/4], 1 on (1/4, 1]:")
h = StepFunction(kappa=1.0, breakpoints=(0.0, 0.25, 1.0), values=(2.0, 1.0))
m = step_moments(h, e)
pt = moments_to_params(m, e)
print(f"  moments: x = {m.x}, y = {m.y:.15f}, z = {m.z}")
print(f"  induced point: s1 = {pt.s1:.16f}, s2 = {pt.s2:.16f}")

lhs, est = hardy_lhs(h, e)
print(f"  averaging functional = {lhs:.16f}  (quadrature error estimate {est:.1e})")
print(f"  closed form 1 + 0.9375 + ln 2 = {1.9375 + math.log(2):.16f}")

rep = verify_hardy(h, e)
print(f"  solved constant t = {rep.t:.12f}, t^p z = {rep.rhs:.12f}")
print(f"  lhs <= t^p z?  {rep.passed}   (needs t^2 >= {lhs / m.z:.12f})\n")

print("Seeded random batch, 60 samples per exponent pair:")
for pair in (Exponents(2.0, 1.5), Exponents(3.0, 2.0)):
    worst = 0.0
    for i in range(60):
        sample = sample_step(500 + i, 2 + i % 7, (0.5, 1.0, 3.0)[i % 3], pair)
        r = verify_hardy(sample, pair)
        assert r.passed
        worst = max(worst, r.lhs / r.rhs)
    print(f"  p = {pair.p}, q = {pair.q}: all passed, max lhs/(t^p z) = {worst:.6f}")

print("\nRearrangement: sorting h to be nonincreasing only raises the functional:")
sample = sample_step(42, 5, 1.0, e)
sorted_sample = decreasing_rearrangement(sample)
print(f"  original values   {tuple(round(v, 3) for v in sample.values)}"
      f" -> lhs = {hardy_lhs(sample, e)[0]:.10f}")
print(f"  rearranged values {tuple(round(v, 3) for v in sorted_sample.values)}"
      f" -> lhs = {hardy_lhs(sorted_sample, e)[0]:.10f}")
print(f"  both pass: {verify_hardy(sample, e).passed} / {verify_hardy(sorted_sample, e).passed}")
