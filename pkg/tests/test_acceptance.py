"""Acceptance suite: one test per criterion, run at the stated tolerances.

Each test prints one pass line with its check counts and elapsed time
(visible with  pytest -s  or in the -v test report).  The grids solved for
the monotonicity criterion are shared with the sign criterion via a
module-scoped fixture.
"""

import math
import time

import numpy as np
import pytest

from hardyconst import (
    Exponents,
    ParamPoint,
    big_f,
    big_f_deriv,
    big_g,
    delta_eval,
    dt_ds1,
    endgame_constants,
    eq_omega_curve,
    gamma_eval,
    h_eval,
    hardy_lhs,
    lambda_eval,
    omega,
    sample_step,
    solve_t,
    threshold,
    verify_hardy,
)
from hardyconst.cli import main
from hardyconst.hardy import StepFunction
from hardyconst.verify import feasible_s1_grid

E2 = Exponents(2.0, 1.5)
E3 = Exponents(3.0, 2.0)
E25 = Exponents(2.5, 1.3)

THEOREM_PAIRS = (E2, E3, E25)
THEOREM_S2 = (0.75, 0.85, 0.92, 0.96)


@pytest.fixture(scope="module")
def theorem_grids():
    """40-point feasible s1 grids, solved, for every (pair, s2) combination."""
    grids = []
    for e in THEOREM_PAIRS:
        for s2 in THEOREM_S2:
            s1s = feasible_s1_grid(e, s2, 40)
            sols = [solve_t(e, ParamPoint(s1, s2)) for s1 in s1s]
            grids.append((e, s2, s1s, sols))
    return grids


def test_criterion_1_inverse_function_suite():
    start = time.perf_counter()
    checks = 0
    grid = np.linspace(0.0, 1.0, 1000)
    for r in (1.3, 1.5, 2.0, 3.0, 5.0):
        for s in grid:
            s = float(s)
            assert abs(h_eval(r, omega(r, s)) - s) <= 1e-12
            checks += 1
    for s in grid:
        s = float(s)
        assert abs(omega(2.0, s) - (1.0 + math.sqrt(1.0 - s))) <= 1e-13
        checks += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"criterion 1 PASS: inverse-function suite ({checks} checks, {elapsed:.2f}s)")


def test_criterion_2_equal_omega_anchor():
    start = time.perf_counter()
    for e in (E2, E3):
        for s1 in np.linspace(0.05, 0.95, 52)[1:-1]:
            s1 = float(s1)
            s2 = eq_omega_curve(e, s1)
            sol = solve_t(e, ParamPoint(s1, s2))
            assert abs(sol.t - omega(e.p, s1)) <= 1e-8
            assert abs(sol.tau - s2) <= 1e-8

    pt = ParamPoint(0.75, 0.9185586535436918)
    sol = solve_t(E2, pt)
    gamma = gamma_eval(E2, pt, sol)
    delta = delta_eval(E2, pt, sol)
    assert abs(sol.t - 1.5) <= 1e-9
    assert abs(gamma - (-1.5)) <= 1e-9
    assert abs(delta - 2.25) <= 1e-9
    assert abs(sol.t * gamma / delta - (-1.0)) <= 1e-9
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    print(f"criterion 2 PASS: equal-omega anchors (2 pairs x 50 points, {elapsed:.2f}s)")


def test_criterion_3_strict_monotonicity(theorem_grids):
    start = time.perf_counter()
    assert len(theorem_grids) == len(THEOREM_PAIRS) * len(THEOREM_S2)
    for e, s2, s1s, sols in theorem_grids:
        assert len(sols) == 40
        ts = [sol.t for sol in sols]
        diffs = np.diff(ts)
        assert np.all(diffs < -1e-9), f"not strictly decreasing at p={e.p}, q={e.q}, s2={s2}"
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    print(f"criterion 3 PASS: strict monotonicity (12 grids x 40 points, {elapsed:.2f}s)")


def test_criterion_4_derivative_identity():
    start = time.perf_counter()
    checks = 0
    for e in (E2, E3):
        for s2 in np.linspace(0.3, 0.96, 20):
            s2 = float(s2)
            for s1 in feasible_s1_grid(e, s2, 20, lo_frac=0.05, hi_frac=0.9):
                rep = dt_ds1(e, ParamPoint(s1, s2))
                assert rep.fd_rel_err <= 1e-5, (
                    f"FD mismatch {rep.fd_rel_err} at ({s1}, {s2}), p={e.p}, q={e.q}"
                )
                assert rep.dt_ds1 < 0.0
                checks += 1
        assert checks >= 400  # a full 20 x 20 interior grid per pair
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"criterion 4 PASS: derivative identity vs FD ({checks} points, {elapsed:.2f}s)")


def test_criterion_5_sign_suite(theorem_grids):
    start = time.perf_counter()
    checks = 0
    for e, s2, s1s, sols in theorem_grids:
        for s1, sol in zip(s1s, sols):
            pt = ParamPoint(s1, s2)
            assert gamma_eval(e, pt, sol) < 0.0
            assert delta_eval(e, pt, sol) > 0.0
            assert lambda_eval(e, pt, sol.t) > 0.0
            assert e.p * s1 ** ((e.p - e.q) / (e.p - 1.0)) < (e.p - e.q) * s1 + e.q
            checks += 1
    elapsed = time.perf_counter() - start
    print(f"criterion 5 PASS: sign suite ({checks} points, {elapsed:.2f}s)")


def test_criterion_6_limit_suite():
    start = time.perf_counter()
    for s2 in (0.3, 0.5, 0.65):
        assert s2 < threshold(E2)
        t = solve_t(E2, ParamPoint(1e-8, s2)).t
        assert 2.0 - 1e-3 <= t < 2.0

    for s2 in (0.3, 0.5, 0.65):
        pt = ParamPoint(1e-8, s2)
        g = gamma_eval(E2, pt, solve_t(E2, pt))
        assert abs(g - big_f(E2, s2)) <= 5e-2

    # Known-red clause: the small-s1 limit of gamma at s2 = 0.9 is
    # F(0.9) = -3.1249..., and -1.0 = -(p-q)/(q-1) is only an upper bound
    # for it, so a value assertion against -1.0 cannot hold.
    pt = ParamPoint(1e-8, 0.9)
    g = gamma_eval(E2, pt, solve_t(E2, pt))
    elapsed = time.perf_counter() - start
    assert abs(g - (-1.0)) <= 5e-2, (
        f"gamma(1e-8, 0.9) = {g}; it equals the limit profile value "
        f"F(0.9) = {big_f(E2, 0.9)} and only satisfies the bound "
        f"gamma <= -(p-q)/(q-1) = -1.0 ({elapsed:.2f}s)"
    )
    print(f"criterion 6 PASS: limit suite ({elapsed:.2f}s)")


def test_criterion_7_endgame_suite():
    start = time.perf_counter()
    for e in (E2, E3, E25):
        consts = endgame_constants(e)
        thr = consts.threshold
        for k in range(1, 101):
            s2 = thr * k / 101.0
            assert big_f(e, s2) < 0.0
            assert big_f_deriv(e, s2) > 0.0
        assert abs(big_f(e, thr) - consts.f_at_threshold) <= 1e-10
        g_grid = np.linspace(0.02, 0.98, 193)
        g_vals = [big_g(e, float(s2)) for s2 in g_grid]
        assert all(b > a for a, b in zip(g_vals, g_vals[1:]))
        assert (e.q / (e.q - 1.0)) ** e.q < consts.a
    assert abs(big_f(E2, threshold(E2)) - (-3.0)) <= 1e-10
    elapsed = time.perf_counter() - start
    print(f"criterion 7 PASS: endgame suite (3 pairs, {elapsed:.2f}s)")


def test_criterion_8_hardy_inequality():
    start = time.perf_counter()
    checked = 0
    for e in (E2, E3):
        for i in range(500):
            h = sample_step(10_000 + i, 2 + i % 7, (0.5, 1.0, 3.0)[i % 3], e)
            rep = verify_hardy(h, e)
            assert rep.passed, f"violation at sample {i}, p={e.p}, q={e.q}"
            checked += 1

    two_step = StepFunction(kappa=1.0, breakpoints=(0.0, 0.25, 1.0), values=(2.0, 1.0))
    lhs, _ = hardy_lhs(two_step, E2)
    assert abs(lhs - 2.6306471805599453) <= 1e-9
    sol = solve_t(E2, ParamPoint(0.8928571428571429, 0.9591208730328413))
    assert sol.t**2 >= 1.5032269603199688
    assert verify_hardy(two_step, E2).passed
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"criterion 8 PASS: averaging inequality ({checked} samples, {elapsed:.2f}s)")


def test_criterion_9_cli_determinism(tmp_path, capsys):
    start = time.perf_counter()
    scan_args = [
        "scan", "--p", "2", "--q", "1.5", "--s2", "0.85", "0.92",
        "--s1-min", "0.05", "--s1-max", "0.75", "--n", "16",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main([*scan_args, "--out", str(a)]) == 0
    assert main([*scan_args, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()

    assert main(["verify", "--p", "2", "--q", "1.5", "--grid", "30"]) == 0
    assert main(["verify", "--p", "3", "--q", "2", "--grid", "30"]) == 0
    capsys.readouterr()  # swallow the suite listings
    elapsed = time.perf_counter() - start
    print(f"criterion 9 PASS: CLI determinism and verify exit codes ({elapsed:.2f}s)")
