"""The derivative identity dt/ds1 * delta = t * gamma, cross-checked by FD.

gamma < 0 and delta > 0 everywhere on the region, which is exactly why the
constant is strictly decreasing in s1.  The analytic derivative agrees with
central finite differences of the solver to a few parts in 1e6 or better.
"""

import numpy as np

from hardyconst import Exponents, ParamPoint, dt_ds1, dtau_ds1, dtau_dt, solve_t

e = Exponents(2.0, 1.5)

print("At the closed-form anchor (s1, s2) = (0.75, H_q(1.5)) everything is rational:")
rep = dt_ds1(e, ParamPoint(0.75, 0.9185586535436918))
print(f"  t       = {rep.t:.12f}")
print(f"  gamma   = {rep.gamma_val:.12f}")
print(f"  delta   = {rep.delta_val:.12f}")
print(f"  dt/ds1  = {rep.dt_ds1:.12f}   FD: {rep.dt_ds1_fd:.12f}"
      f"   rel err {rep.fd_rel_err:.1e}")

print("\nAcross the region (sign pattern and FD agreement):")
print("    s1     s2        t        gamma     delta    dt/ds1    FD rel err")
for s2 in (0.5, 0.75, 0.9):
    top = s2 ** ((e.p - 1) / (e.q - 1))
    for frac in (0.15, 0.5, 0.85):
        pt = ParamPoint(frac * top, s2)
        r = dt_ds1(e, pt)
        print(f"  {pt.s1:.3f}  {pt.s2:.3f}  {r.t:8.5f}  {r.gamma_val:8.4f}"
              f"  {r.delta_val:8.4f}  {r.dt_ds1:8.4f}   {r.fd_rel_err:.1e}")

print("\nBoth tau partials are positive; here against finite differences:")
pt = ParamPoint(0.5, 0.8)
t = solve_t(e, pt).t
print(f"  at the solution t = {t:.6f} of (s1, s2) = (0.5, 0.8):")
print(f"  dtau/dt  = {dtau_dt(e, pt, t):.10f}")
print(f"  dtau/ds1 = {dtau_ds1(e, pt, t):.10f}")

print("\nThe t-column of a small scan is monotone in s1 for every fixed s2:")
for s2 in (0.8, 0.9):
    ts = [dt_ds1(e, ParamPoint(float(s1), s2)).t for s1 in np.linspace(0.1, 0.6, 5)]
    drops = np.diff(ts)
    print(f"  s2 = {s2}: t = {np.round(ts, 6)}  (all drops negative: {bool(np.all(drops < 0))})")
