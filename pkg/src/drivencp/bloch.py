"""Optical Bloch dynamics of the driven two-level atom without damping.

The rotating-frame equations under the RWA,

    da10/dt = -i Delta a10 + (i/2) Omega (p1 - p0)
    da01/dt = +i Delta a01 - (i/2) Omega (p1 - p0)
    dp1/dt  = (i/2) Omega (a10 - a01)
    dp0/dt  = -(i/2) Omega (a10 - a01)

have the closed-form solution (ground-state start, W = sqrt(Delta^2+Omega^2)):

    p0(t)  = (Omega^2/W^2) cos^2(W t / 2) + Delta^2/W^2
    p1(t)  = (Omega^2/W^2) sin^2(W t / 2)
    a10(t) = [-(Omega Delta/W^2) sin^2(W t/2) - i (Omega/2W) sin(W t)] e^(+i omega_l t)
    a01(t) = conj(a10(t))

`bloch_analytic` evaluates the closed forms; `bloch_ode_oracle` integrates the
linear system with fixed-step RK4 as an independent numerical check (fixed
step keeps the oracle deterministic for golden tests).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ResolutionError
from .params import DrivenSystem

# Population / conjugacy validation tolerances for constructed states.
_TRACE_TOL = 1e-12
_RANGE_TOL = 1e-12
_CONJ_TOL = 1e-12


@dataclass(frozen=True)
class BlochState:
    """Populations and lab-frame coherences at one instant."""

    t: float
    p0: float
    p1: float
    a10: complex
    a01: complex

    def __post_init__(self) -> None:
        if abs(self.p0 + self.p1 - 1.0) > _TRACE_TOL:
            raise AssertionError(f"populations violate p0 + p1 = 1 at t={self.t}: {self.p0 + self.p1}")
        if not (-_RANGE_TOL <= self.p0 <= 1.0 + _RANGE_TOL):
            raise AssertionError(f"p0 out of [0, 1]: {self.p0}")
        if not (-_RANGE_TOL <= self.p1 <= 1.0 + _RANGE_TOL):
            raise AssertionError(f"p1 out of [0, 1]: {self.p1}")
        if abs(self.a01 - self.a10.conjugate()) > _CONJ_TOL:
            raise AssertionError("coherences violate a01 = conj(a10)")


def bloch_analytic(sys: DrivenSystem, t: float) -> BlochState:
    """Closed-form state at time t >= 0, starting from the ground state."""
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    om = sys.omega_rabi
    de = sys.delta
    w = sys.omega_dressed
    if w == 0.0:
        # No drive and no detuning: the atom just sits in the ground state.
        return BlochState(t=t, p0=1.0, p1=0.0, a10=0j, a01=0j)
    s2 = math.sin(0.5 * w * t) ** 2
    frac = (om / w) ** 2
    p1 = frac * s2
    p0 = frac * (1.0 - s2) + (de / w) ** 2
    rot = -(om * de / w**2) * s2 - 0.5j * (om / w) * math.sin(w * t)
    phase = cmath.exp(1j * sys.laser.omega_l * t)
    a10 = rot * phase
    return BlochState(t=t, p0=p0, p1=p1, a10=a10, a01=a10.conjugate())


def _rwa_derivative(sys: DrivenSystem, a10: complex, a01: complex, p1: float, p0: float):
    om = sys.omega_rabi
    de = sys.delta
    da10 = -1j * de * a10 + 0.5j * om * (p1 - p0)
    da01 = 1j * de * a01 - 0.5j * om * (p1 - p0)
    # (i/2) Omega (a10 - a01) is real for conjugate coherences; keep only
    # the real part so rounding noise cannot leak into the populations.
    dp1 = (0.5j * om * (a10 - a01)).real
    return da10, da01, dp1, -dp1


def _check_step(sys: DrivenSystem, dt: float) -> None:
    if dt <= 0:
        raise ResolutionError(f"step must be > 0, got {dt}")
    if sys.omega_dressed > 0 and dt * sys.omega_dressed > 0.01 * (1 + 1e-12):
        raise ResolutionError(
            f"step {dt:.3e} s too coarse: need dt <= 0.01/omega_dressed = "
            f"{0.01 / sys.omega_dressed:.3e} s"
        )


def bloch_ode_trajectory(sys: DrivenSystem, t_end: float, dt: float) -> list[BlochState]:
    """Fixed-step RK4 trajectory of the rotating-frame system on [0, t_end].

    Returns the state at every step, rotated back to the lab frame with
    e^(+-i omega_l t).  The trace p0 + p1 is conserved exactly by the
    right-hand side, so trace drift measures pure rounding noise.
    """
    if t_end < 0:
        raise ValueError(f"t_end must be >= 0, got {t_end}")
    _check_step(sys, dt)
    n_steps = max(1, math.ceil(t_end / dt - 1e-9)) if t_end > 0 else 0
    h = t_end / n_steps if n_steps else dt

    a10, a01 = 0j, 0j
    p1, p0 = 0.0, 1.0
    out = [BlochState(t=0.0, p0=p0, p1=p1, a10=0j, a01=0j)]
    for k in range(n_steps):
        k1 = _rwa_derivative(sys, a10, a01, p1, p0)
        k2 = _rwa_derivative(sys, a10 + 0.5 * h * k1[0], a01 + 0.5 * h * k1[1],
                             p1 + 0.5 * h * k1[2], p0 + 0.5 * h * k1[3])
        k3 = _rwa_derivative(sys, a10 + 0.5 * h * k2[0], a01 + 0.5 * h * k2[1],
                             p1 + 0.5 * h * k2[2], p0 + 0.5 * h * k2[3])
        k4 = _rwa_derivative(sys, a10 + h * k3[0], a01 + h * k3[1],
                             p1 + h * k3[2], p0 + h * k3[3])
        a10 += (h / 6.0) * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        a01 += (h / 6.0) * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        p1 += (h / 6.0) * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
        p0 += (h / 6.0) * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3])
        t = (k + 1) * h
        phase = cmath.exp(1j * sys.laser.omega_l * t)
        lab10 = a10 * phase
        out.append(BlochState(t=t, p0=p0, p1=p1, a10=lab10, a01=lab10.conjugate()))
    return out


def bloch_ode_oracle(sys: DrivenSystem, t_end: float, dt: float) -> BlochState:
    """Final state of the fixed-step RK4 integration (see bloch_ode_trajectory)."""
    return bloch_ode_trajectory(sys, t_end, dt)[-1]


def dipole_bloch(sys: DrivenSystem, t: float) -> float:
    """Expectation value of the dipole along its axis [C m]:

        d_eff [ -(2 Omega Delta / W^2) sin^2(W t/2) cos(omega_l t)
                + (Omega / W) sin(W t) sin(omega_l t) ]

    equal to d_eff (a10 + a01) of the analytic solution.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    om = sys.omega_rabi
    de = sys.delta
    w = sys.omega_dressed
    if w == 0.0:
        return 0.0
    d_eff = sys.alignment.effective_dipole(sys.atom.d)
    wl = sys.laser.omega_l
    term_det = -(2.0 * om * de / w**2) * math.sin(0.5 * w * t) ** 2 * math.cos(wl * t)
    term_res = (om / w) * math.sin(w * t) * math.sin(wl * t)
    return d_eff * (term_det + term_res)


def correlation_functions(sys: DrivenSystem, t: float) -> tuple[float, float]:
    """Amplitude factors of the flip-operator correlations at equal late times.

    Returns (c_eg, c_ge); apart from the e^(+-i omega_l (t - tau)) phases these
    coincide with the occupation probabilities: c_eg = p1(t), c_ge = p0(t).
    """
    state = bloch_analytic(sys, t)
    return state.p1, state.p0
