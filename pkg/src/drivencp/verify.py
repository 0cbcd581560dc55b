"""Cross-route consistency suite behind `drivencp verify`.

Each check pits two independent computations of the same quantity against
each other (analytic vs RK4, adaptive quadrature vs brute-force grid, closed
form vs tensor contraction, full form vs printed limit).  The optional Rabi
sign flip corrupts the drive on purpose: even-parity checks must survive it,
the odd-parity dipole-phase check must catch it.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .bloch import bloch_analytic, bloch_ode_trajectory, dipole_bloch
from .params import Alignment, DrivenSystem, build_driven_system, sodium_atom, sodium_laser, sodium_system
from .polarizability import alpha_detuning, alpha_isotropic
from .potentials import (
    resonant_excited_term,
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
from .quadrature import integrate_nonresonant, riemann_reference
from .constants import CONST
from .params import AtomParams, LaserParams


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _flip(sys: DrivenSystem, flip: bool) -> DrivenSystem:
    if not flip:
        return sys
    return dataclasses.replace(sys, omega_rabi=-sys.omega_rabi)


def _system_at_ratio(ratio: float, flip: bool) -> DrivenSystem:
    """Reference drive retuned so that Delta / Omega equals the given ratio."""
    base = sodium_system()
    atom = base.atom
    delta = ratio * base.omega_rabi
    laser = LaserParams(omega_l=atom.omega10 + delta if delta != 0 else atom.omega10,
                        e0=base.laser.e0, theta=base.laser.theta)
    return _flip(build_driven_system(atom, laser, Alignment.PARALLEL), flip)


def check_bloch_oracle(flip: bool = False, ratios=(0.0, 0.29, 1.0, 5.0, 20.0)) -> CheckResult:
    worst = 0.0
    for ratio in ratios:
        sys = _system_at_ratio(ratio, flip)
        w = sys.omega_dressed
        t_end = 5.0 * 2.0 * math.pi / w
        dt = 0.01 / w
        for state in bloch_ode_trajectory(sys, t_end, dt):
            ref = bloch_analytic(sys, state.t)
            err = max(abs(state.p0 - ref.p0), abs(state.p1 - ref.p1), abs(state.a10 - ref.a10))
            worst = max(worst, err)
    return CheckResult("bloch_oracle_vs_analytic", worst < 1e-8,
                       f"max |RK4 - analytic| = {worst:.3e} over 5 dressed periods (tol 1e-8)")


def check_population_trace(flip: bool = False, n_times: int = 10_000) -> CheckResult:
    worst = 0.0
    for ratio in (0.0, 0.29, 1.0, 5.0, 20.0):
        sys = _system_at_ratio(ratio, flip)
        t_max = 5.0 * 2.0 * math.pi / sys.omega_dressed
        for t in np.linspace(0.0, t_max, n_times):
            s = bloch_analytic(sys, float(t))
            worst = max(worst, abs(s.p0 + s.p1 - 1.0))
    return CheckResult("population_trace", worst < 1e-12,
                       f"max |p0 + p1 - 1| = {worst:.3e} at {n_times} times per drive (tol 1e-12)")


def check_quadrature_oracle(flip: bool = False, n_grid: int = 1_000_000) -> CheckResult:
    atom = sodium_atom()
    omega_l = sodium_laser().omega_l
    weights = (atom.d**2 / 3.0, 0.0, 0.0)
    worst = 0.0
    for z in (1e-7, 1e-6):
        adaptive = integrate_nonresonant(z, omega_l, weights).value
        brute = riemann_reference(z, omega_l, weights, n_points=n_grid)
        worst = max(worst, abs(adaptive - brute) / abs(brute))
    return CheckResult("quadrature_vs_bruteforce", worst < 1e-6,
                       f"max relative gap = {worst:.3e} on {n_grid}-point log grid (tol 1e-6)")


def check_nonretarded_limits(flip: bool = False) -> CheckResult:
    sys = _flip(sodium_system(), flip)
    atom = sys.atom
    alpha = alpha_isotropic(atom, sys.laser.omega_l)
    worst = 0.0
    z_p = 1e-3 * CONST.c / sys.laser.omega_l
    worst = max(worst, abs(u_lcp_perturbative(sys, alpha, z_p)
                           / u_lcp_perturbative_nonretarded(sys, alpha, z_p) - 1.0))
    z_u = 1e-3 * CONST.c / atom.omega10
    worst = max(worst, abs(u_cp_undriven_excited(atom, z_u)
                           / u_cp_undriven_nonretarded(atom, z_u) - 1.0))
    worst = max(worst, abs(u_lcp_bloch(sys, z_p, t=None, mode="resonant")
                           / u_lcp_bloch_nonretarded(sys, z_p) - 1.0))
    return CheckResult("nonretarded_limits", worst < 5e-3,
                       f"max |full/limit - 1| = {worst:.3e} at omega z/c = 1e-3 (tol 5e-3)")


def check_retarded_limits(flip: bool = False) -> CheckResult:
    sys = _flip(sodium_system(), flip)
    atom = sys.atom
    alpha = alpha_isotropic(atom, sys.laser.omega_l)
    worst = 0.0
    for k in np.linspace(100.0, 103.0, 7):   # scan a few oscillation phases
        z_p = float(k) * CONST.c / sys.laser.omega_l
        amp = CONST.mu0 * sys.laser.omega_l**2 * alpha.real_value**2 * sys.laser.e0**2 / (16.0 * math.pi * z_p)
        worst = max(worst, abs(u_lcp_perturbative(sys, alpha, z_p)
                               - u_lcp_perturbative_retarded(sys, alpha, z_p)) / amp)
        z_u = float(k) * CONST.c / atom.omega10
        amp_u = CONST.mu0 * atom.omega10**2 * atom.d**2 / (24.0 * math.pi * z_u)
        worst = max(worst, abs(u_cp_undriven_excited(atom, z_u)
                               - u_cp_undriven_retarded(atom, z_u)) / amp_u)
        amp_b = (CONST.mu0 * sys.laser.omega_l**2 * atom.d**2 / (48.0 * math.pi * z_p)
                 * (sys.omega_rabi / sys.omega_dressed) ** 2)
        worst = max(worst, abs(u_lcp_bloch(sys, z_p, t=None, mode="resonant")
                               - u_lcp_bloch_retarded(sys, z_p)) / amp_b)
    return CheckResult("retarded_limits", worst < 1e-2,
                       f"max |full - limit| / amplitude = {worst:.3e} at omega z/c ~ 1e2 (tol 1e-2)")


def check_saturation(flip: bool = False) -> CheckResult:
    base = sodium_system()
    atom = base.atom
    # Omega / Delta = 100 with omega_l pinned next to the transition.
    delta = abs(base.omega_rabi) / 100.0
    laser = LaserParams(omega_l=atom.omega10 + delta, e0=base.laser.e0, theta=base.laser.theta)
    sys = _flip(build_driven_system(atom, laser, Alignment.PARALLEL), flip)
    worst = 0.0
    for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 10):
        half = 0.5 * u_cp_undriven_excited(atom, float(z))
        worst = max(worst, abs(u_lcp_bloch(sys, float(z), t=None, mode="resonant") / half - 1.0))
    # Bound: the time-resolved resonant potential never exceeds the undriven
    # magnitude when the drive sits on the transition.
    laser_res = LaserParams(omega_l=atom.omega10, e0=base.laser.e0, theta=base.laser.theta)
    sys_res = _flip(build_driven_system(atom, laser_res, Alignment.PARALLEL), flip)
    bound_ok = True
    t_grid = np.linspace(0.0, 2.0 * math.pi / sys_res.omega_dressed, 32)
    for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 32):
        cap = abs(u_cp_undriven_excited(atom, float(z))) * (1.0 + 1e-12)
        for t in t_grid:
            if abs(u_lcp_bloch(sys_res, float(z), t=float(t), mode="resonant")) > cap:
                bound_ok = False
    passed = worst < 1e-3 and bound_ok
    return CheckResult("saturation_half_rule", passed,
                       f"max |U_bloch / (U_undriven/2) - 1| = {worst:.3e} (tol 1e-3); "
                       f"bound {'holds' if bound_ok else 'VIOLATED'} on 1024-point (z, t) grid")


def check_large_detuning_light(flip: bool = False) -> CheckResult:
    atom = sodium_atom()
    base = build_driven_system(atom, sodium_laser(), Alignment.ISOTROPIC)
    delta = 100.0 * abs(base.omega_rabi)
    laser = LaserParams(omega_l=atom.omega10 + delta, e0=base.laser.e0, theta=base.laser.theta)
    sys = _flip(build_driven_system(atom, laser, Alignment.ISOTROPIC), flip)
    gap = abs(u_light_bloch(sys, t=None) / u_light(sys) - 1.0)
    return CheckResult("large_detuning_light", gap < 1e-2,
                       f"|U_bloch_avg / U_light - 1| = {gap:.3e} at Delta/Omega = 100 (tol 1e-2)")


def check_large_detuning_cp(flip: bool = False) -> CheckResult:
    atom = sodium_atom()
    base = build_driven_system(atom, sodium_laser(), Alignment.ISOTROPIC)
    worst_margin = -math.inf
    detail = []
    for ratio in (10.0, 100.0):
        delta = ratio * abs(base.omega_rabi)
        laser = LaserParams(omega_l=atom.omega10 + delta, e0=base.laser.e0, theta=math.pi / 2)
        sys = _flip(build_driven_system(atom, laser, Alignment.ISOTROPIC), flip)
        alpha = alpha_detuning(atom, sys.delta)
        tol = (sys.omega_rabi / sys.delta) ** 2
        worst = 0.0
        for z in np.logspace(math.log10(3e-8), math.log10(3e-6), 8):
            pert = u_lcp_perturbative(sys, alpha, float(z))
            bloch = u_lcp_bloch(sys, float(z), t=None, mode="resonant")
            worst = max(worst, abs(bloch - pert) / abs(pert))
        detail.append(f"Delta/Omega={ratio:g}: gap {worst:.3e} vs (Omega/Delta)^2 = {tol:.1e}")
        worst_margin = max(worst_margin, worst - tol)
    return CheckResult("large_detuning_cp", worst_margin <= 0.0, "; ".join(detail))


def check_perreault_ratio(flip: bool = False) -> CheckResult:
    sys = _flip(sodium_system(), flip)
    alpha = alpha_isotropic(sys.atom, sys.laser.omega_l)
    c_over_w = CONST.c / sys.laser.omega_l
    near_ok = True
    for x in np.logspace(math.log10(2e-3), math.log10(3e-2), 24):
        z = float(x) * c_over_w
        ratio = u_lcp_perreault(sys, alpha, z) / u_lcp_perturbative(sys, alpha, z)
        if abs(ratio - 1.0) > 0.02:
            near_ok = False
    far_dev = 0.0
    for x in np.linspace(1.0, 10.0, 181):
        z = float(x) * c_over_w
        full = u_lcp_perturbative(sys, alpha, z)
        if full != 0.0:
            far_dev = max(far_dev, abs(u_lcp_perreault(sys, alpha, z) / full - 1.0))
    passed = near_ok and far_dev > 0.2
    return CheckResult("perreault_ratio", passed,
                       f"near field within 2% of 1: {near_ok}; "
                       f"max deviation in omega z/c in [1,10]: {far_dev:.2f} (> 0.2 required)")


def check_internal_consistency(flip: bool = False, n_points: int = 100) -> CheckResult:
    rng = np.random.default_rng(181121)
    atom = sodium_atom()
    base = sodium_laser()
    worst = 0.0
    for _ in range(n_points):
        z = float(10 ** rng.uniform(math.log10(3e-8), math.log10(3e-6)))
        theta = float(rng.uniform(0.0, math.pi / 2))
        laser = LaserParams(omega_l=base.omega_l, e0=base.e0, theta=theta)
        sys = _flip(build_driven_system(atom, laser, Alignment.PARALLEL), flip)
        alpha = alpha_isotropic(atom, laser.omega_l)
        closed = u_lcp_perturbative(sys, alpha, z, method="closed_form")
        contracted = u_lcp_perturbative(sys, alpha, z, method="contraction")
        worst = max(worst, abs(closed - contracted) / max(abs(closed), abs(contracted)))
    return CheckResult("internal_consistency", worst < 1e-12,
                       f"max |closed - contraction| / |value| = {worst:.3e} at {n_points} random (z, theta)")


def check_dipole_phase(flip: bool = False) -> CheckResult:
    """Early-drive dipole phase: on resonance the induced dipole first swings positive.

    The dipole is odd in Omega, so a corrupted Rabi sign is caught here while
    every Omega^2 check stays green.
    """
    atom = sodium_atom()
    laser = LaserParams(omega_l=atom.omega10, e0=sodium_laser().e0, theta=math.pi / 2)
    sys = _flip(build_driven_system(atom, laser, Alignment.PARALLEL), flip)
    om = abs(sys.omega_rabi)
    wl = laser.omega_l
    # Quarter Rabi period, nudged onto a positive crest of sin(omega_l t).
    t_target = 0.5 * math.pi / om
    n = round((t_target * wl / (2.0 * math.pi)) - 0.25)
    t = (2.0 * math.pi * n + 0.5 * math.pi) / wl
    value = dipole_bloch(sys, t)
    return CheckResult("dipole_phase", value > 0.0,
                       f"resonant dipole at quarter Rabi period = {value:.3e} C m (must be > 0)")


ALL_CHECKS = (
    check_bloch_oracle,
    check_population_trace,
    check_quadrature_oracle,
    check_nonretarded_limits,
    check_retarded_limits,
    check_saturation,
    check_large_detuning_light,
    check_large_detuning_cp,
    check_perreault_ratio,
    check_internal_consistency,
    check_dipole_phase,
)


def run_checks(flip_rabi_sign: bool = False) -> list[CheckResult]:
    return [check(flip_rabi_sign) for check in ALL_CHECKS]
