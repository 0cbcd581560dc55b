"""Acceptance suite: one test per release criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import math
import time

import numpy as np
import pytest

from drivencp import (
    Alignment,
    CONST,
    LaserParams,
    U_LIGHT_SODIUM_LITERATURE,
    alpha_detuning,
    alpha_isotropic,
    bloch_analytic,
    bloch_ode_trajectory,
    build_driven_system,
    integrate_nonresonant,
    riemann_reference,
    sodium_atom,
    sodium_laser,
    sodium_system,
    u_cp_undriven_excited,
    u_cp_undriven_nonretarded,
    u_cp_undriven_retarded,
    u_lcp_bloch,
    u_lcp_bloch_nonretarded,
    u_lcp_bloch_retarded,
    u_lcp_perreault,
    u_lcp_perturbative,
    u_lcp_perturbative_nonretarded,
    u_lcp_perturbative_retarded,
    u_light,
    u_light_bloch,
)
from drivencp.cli import main as cli_main
from conftest import system_with_ratio


def report(name: str, passed: bool, detail: str) -> None:
    print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    assert passed, f"{name}: {detail}"


def test_parameter_consistency():
    t0 = time.monotonic()
    atom = sodium_atom()
    volume = alpha_isotropic(atom, 0.0).value.real / (4 * math.pi * CONST.eps0)
    vol_ok = abs(volume / 24.11e-30 - 1.0) < 0.02
    sys = sodium_system(alignment=Alignment.PARALLEL)
    ratio = sys.delta / sys.omega_rabi
    ratio_ok = abs(ratio / 0.29 - 1.0) < 0.03
    elapsed = time.monotonic() - t0
    report("parameter_consistency", vol_ok and ratio_ok and elapsed < 1.0,
           f"alpha_DC/(4 pi eps0) = {volume:.4e} m^3 (target 24.11e-30, 2%); "
           f"Delta/Omega = {ratio:.5f} (target 0.29, 3%); runtime {elapsed:.2f} s < 1 s")


def test_bloch_oracle_equivalence():
    t0 = time.monotonic()
    worst = 0.0
    for ratio in (0.0, 0.29, 1.0, 5.0, 20.0):
        sys = system_with_ratio(ratio)
        w = sys.omega_dressed
        for state in bloch_ode_trajectory(sys, 5 * 2 * math.pi / w, 0.01 / w):
            ref = bloch_analytic(sys, state.t)
            worst = max(worst, abs(state.p0 - ref.p0), abs(state.p1 - ref.p1),
                        abs(state.a10 - ref.a10))
    elapsed = time.monotonic() - t0
    report("bloch_oracle_equivalence", worst < 1e-8 and elapsed < 10.0,
           f"max |RK4 - analytic| = {worst:.3e} (tol 1e-8) over 5 dressed periods, "
           f"Delta/Omega in {{0, 0.29, 1, 5, 20}}; runtime {elapsed:.1f} s < 10 s")


def test_population_normalization():
    worst = 0.0
    for ratio in (0.0, 0.29, 1.0, 5.0, 20.0):
        sys = system_with_ratio(ratio)
        t_max = 5 * 2 * math.pi / sys.omega_dressed
        for t in np.linspace(0.0, t_max, 10_000):
            s = bloch_analytic(sys, float(t))
            worst = max(worst, abs(s.p0 + s.p1 - 1.0))
    report("population_normalization", worst < 1e-12,
           f"max |p0 + p1 - 1| = {worst:.3e} at 1e4 times per parameter set (tol 1e-12)")


def test_quadrature_oracle():
    t0 = time.monotonic()
    atom = sodium_atom()
    omega_l = sodium_laser().omega_l
    weights = (atom.d**2 / 3.0, 0.0, 0.0)
    worst = 0.0
    for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 10):
        adaptive = integrate_nonresonant(float(z), omega_l, weights).value
        brute = riemann_reference(float(z), omega_l, weights, n_points=1_000_000)
        worst = max(worst, abs(adaptive / brute - 1.0))
    elapsed = time.monotonic() - t0
    report("quadrature_oracle", worst < 1e-6 and elapsed < 30.0,
           f"max relative gap to 1e6-point log-grid Riemann sum = {worst:.3e} "
           f"at 10 distances (tol 1e-6); runtime {elapsed:.1f} s < 30 s")


def test_limit_agreement():
    sys = sodium_system()
    atom = sys.atom
    alpha = alpha_isotropic(atom, sys.laser.omega_l)
    wl = sys.laser.omega_l
    w10 = atom.omega10

    z = 1e-3 * CONST.c / wl
    near = [
        abs(u_lcp_perturbative(sys, alpha, z) / u_lcp_perturbative_nonretarded(sys, alpha, z) - 1),
        abs(u_lcp_bloch(sys, z, mode="resonant") / u_lcp_bloch_nonretarded(sys, z) - 1),
    ]
    z10 = 1e-3 * CONST.c / w10
    near.append(abs(u_cp_undriven_excited(atom, z10) / u_cp_undriven_nonretarded(atom, z10) - 1))
    near_worst = max(near)

    far_worst = 0.0
    envelope = (sys.omega_rabi / sys.omega_dressed) ** 2
    for k in np.linspace(100.0, 103.0, 13):
        zp = float(k) * CONST.c / wl
        amp_p = CONST.mu0 * wl**2 * alpha.real_value**2 * sys.laser.e0**2 / (16 * math.pi * zp)
        far_worst = max(far_worst, abs(u_lcp_perturbative(sys, alpha, zp)
                                       - u_lcp_perturbative_retarded(sys, alpha, zp)) / amp_p)
        zu = float(k) * CONST.c / w10
        amp_u = CONST.mu0 * w10**2 * atom.d**2 / (24 * math.pi * zu)
        far_worst = max(far_worst, abs(u_cp_undriven_excited(atom, zu)
                                       - u_cp_undriven_retarded(atom, zu)) / amp_u)
        amp_b = CONST.mu0 * wl**2 * atom.d**2 * envelope / (48 * math.pi * zp)
        far_worst = max(far_worst, abs(u_lcp_bloch(sys, zp, mode="resonant")
                                       - u_lcp_bloch_retarded(sys, zp)) / amp_b)
    report("limit_agreement", near_worst < 5e-3 and far_worst < 1e-2,
           f"nonretarded: max |full/limit - 1| = {near_worst:.2e} at omega z/c = 1e-3 (tol 0.5%); "
           f"retarded: max |full - limit|/amplitude = {far_worst:.2e} at omega z/c ~ 1e2")


def test_saturation_half_rule():
    atom = sodium_atom()
    base = system_with_ratio(0.0)
    delta = base.omega_rabi / 100.0  # Omega / Delta = 100 next to the transition
    sys = build_driven_system(atom, LaserParams(omega_l=atom.omega10 + delta,
                                                e0=base.laser.e0), Alignment.PARALLEL)
    worst = 0.0
    for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 10):
        half = 0.5 * u_cp_undriven_excited(atom, float(z))
        worst = max(worst, abs(u_lcp_bloch(sys, float(z), mode="resonant") / half - 1.0))
    bound_ok = True
    res = system_with_ratio(0.0)
    t_grid = np.linspace(0.0, 2 * math.pi / res.omega_dressed, 32)
    for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 32):
        cap = abs(u_cp_undriven_excited(atom, float(z))) * (1 + 1e-12)
        for t in t_grid:
            if abs(u_lcp_bloch(res, float(z), t=float(t), mode="resonant")) > cap:
                bound_ok = False
    report("saturation_half_rule", worst < 1e-3 and bound_ok,
           f"max |U_bloch/(U_undriven/2) - 1| = {worst:.2e} at 10 distances (tol 0.1%); "
           f"bound over 1024-point (z, t) grid: {'holds' if bound_ok else 'violated'}")


def test_large_detuning_route_equivalence():
    light = system_with_ratio(100.0, alignment=Alignment.ISOTROPIC)
    light_gap = abs(u_light_bloch(light) / u_light(light) - 1.0)
    light_ok = light_gap < 0.01

    cp_ok = True
    gaps = []
    for ratio in (10.0, 100.0):
        sys = system_with_ratio(ratio, alignment=Alignment.ISOTROPIC)
        alpha = alpha_detuning(sys.atom, sys.delta)
        tol = (sys.omega_rabi / sys.delta) ** 2
        worst = 0.0
        for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 8):
            pert = u_lcp_perturbative(sys, alpha, float(z))
            worst = max(worst, abs(u_lcp_bloch(sys, float(z), mode="resonant") - pert) / abs(pert))
        gaps.append(f"Delta/Omega={ratio:g}: {worst:.2e} <= {tol:.0e}")
        cp_ok = cp_ok and worst <= tol
    report("large_detuning_route_equivalence", light_ok and cp_ok,
           f"light potential gap {light_gap:.2e} (tol 1%); CP gaps: {'; '.join(gaps)}")


def test_perreault_comparison():
    sys = sodium_system()
    alpha = alpha_isotropic(sys.atom, sys.laser.omega_l)
    c_over_w = CONST.c / sys.laser.omega_l
    near_worst = 0.0
    for x in np.logspace(math.log10(2e-3), math.log10(3e-2), 24):
        z = float(x) * c_over_w
        near_worst = max(near_worst, abs(u_lcp_perreault(sys, alpha, z)
                                         / u_lcp_perturbative(sys, alpha, z) - 1.0))
    far_dev = 0.0
    for x in np.linspace(1.0, 10.0, 181):
        z = float(x) * c_over_w
        full = u_lcp_perturbative(sys, alpha, z)
        if full != 0.0:
            far_dev = max(far_dev, abs(u_lcp_perreault(sys, alpha, z) / full - 1.0))
    report("perreault_comparison", near_worst < 0.02 and far_dev > 0.2,
           f"ratio within 1 +- {near_worst:.1e} for omega z/c < 3e-2 (tol 2%); "
           f"max deviation {far_dev:.2f} > 20% somewhere in omega z/c in [1, 10]")


def test_internal_consistency():
    rng = np.random.default_rng(181121)
    atom = sodium_atom()
    base = sodium_laser()
    worst = 0.0
    for _ in range(100):
        z = float(10 ** rng.uniform(math.log10(3e-8), math.log10(3e-6)))
        theta = float(rng.uniform(0.0, math.pi / 2))
        sys = build_driven_system(atom, LaserParams(omega_l=base.omega_l, e0=base.e0,
                                                    theta=theta))
        alpha = alpha_isotropic(atom, base.omega_l)
        closed = u_lcp_perturbative(sys, alpha, z, method="closed_form")
        contracted = u_lcp_perturbative(sys, alpha, z, method="contraction")
        worst = max(worst, abs(closed - contracted) / max(abs(closed), abs(contracted)))
    report("internal_consistency", worst < 1e-12,
           f"max |closed form - tensor contraction| / |value| = {worst:.2e} "
           f"at 100 random (z, theta) (tol 1e-12)")


def test_csv_determinism(tmp_path, capsys, monkeypatch):
    blobs = {}
    for cmd, args in [("potential", ["potential", "--figure", "5", "--set", "z_count=16"]),
                      ("dynamics", ["dynamics", "--figure", "4", "--set", "t_count=16"])]:
        runs = []
        for threads, name in [("1", "r1"), ("1", "r2"), ("3", "r3")]:
            monkeypatch.setenv("DRIVEN_CP_THREADS", threads)
            out = tmp_path / f"{cmd}_{name}.csv"
            assert cli_main(args + ["--out", str(out)]) == 0
            capsys.readouterr()
            runs.append(out.read_bytes())
        blobs[cmd] = runs
    ok = all(r[0] == r[1] == r[2] for r in blobs.values())
    report("csv_determinism", ok,
           "potential and dynamics CSVs byte-identical across repeated runs "
           "and DRIVEN_CP_THREADS in {1, 3}")


def test_u_light_documented_only():
    sys = sodium_system()
    computed = u_light(sys)
    report("u_light_documented_only", math.isfinite(computed),
           f"computed U_L = {computed:.3e} J; published value "
           f"{U_LIGHT_SODIUM_LITERATURE:.3e} J reported alongside "
           f"(sign/magnitude convention differs; agreement not asserted)")
