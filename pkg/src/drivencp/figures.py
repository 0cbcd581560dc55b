"""Figure presets: the exact curve sets behind the five standard plots.

All presets bake in the reference sodium drive (see params).  Grids default to
400 log-spaced distances on [3e-8, 3e-6] m, which spans the nonretarded and
retarded regimes at omega_l ~ 3.24e15 rad/s; time curves cover one dressed
period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import Alignment, sodium_atom, sodium_system
from .polarizability import alpha_isotropic
from .potentials import (
    u_cp_undriven_excited,
    u_lcp_bloch,
    u_lcp_perreault,
    u_lcp_perturbative,
)

FIGURE_IDS = (1, 2, 3, 4, 5)
DEFAULT_Z_MIN = 3e-8
DEFAULT_Z_MAX = 3e-6
DEFAULT_N_POINTS = 400

# Distances of the time-dependent preset (figure 4).
FIG4_DISTANCES = (1e-7, 2e-7)

# CSV cell values: keep comma-free.
CONVENTION_FIELD_ALIGNED = "field-aligned isotropic alpha"
CONVENTION_X_THIRD = "x-aligned d^2/3"


@dataclass(frozen=True)
class PotentialCurve:
    """One sampled curve of a figure: U over z or over t, with labeling metadata."""

    key: str           # stable group key used in CSV rows
    label: str         # legend text
    route: str         # PotentialRoute value string
    convention: str
    x_name: str        # "z_m" or "t_s"
    x: np.ndarray
    values: np.ndarray
    z: float | None = None   # fixed distance for time curves


def default_z_grid(n_points: int = DEFAULT_N_POINTS,
                   z_min: float = DEFAULT_Z_MIN,
                   z_max: float = DEFAULT_Z_MAX) -> np.ndarray:
    if n_points < 2 or not (0 < z_min < z_max):
        raise ValueError("grid needs >= 2 points and 0 < z_min < z_max")
    return np.logspace(math.log10(z_min), math.log10(z_max), n_points)


def default_t_grid(n_points: int = DEFAULT_N_POINTS) -> np.ndarray:
    """One dressed period of the reference drive (covers four sin^2(2Wt) cycles)."""
    sys = sodium_system()
    t_max = 2.0 * math.pi / sys.omega_dressed
    return np.linspace(0.0, t_max, n_points)


def _pert_curve(key: str, label: str, detuning_scale: float, z: np.ndarray) -> PotentialCurve:
    sys = sodium_system(detuning_scale=detuning_scale)
    alpha = alpha_isotropic(sys.atom, sys.laser.omega_l)
    vals = np.array([u_lcp_perturbative(sys, alpha, float(zz)) for zz in z])
    return PotentialCurve(key, label, "pert", CONVENTION_FIELD_ALIGNED, "z_m", z, vals)


def _perreault_curve(z: np.ndarray) -> PotentialCurve:
    sys = sodium_system()
    alpha = alpha_isotropic(sys.atom, sys.laser.omega_l)
    vals = np.array([u_lcp_perreault(sys, alpha, float(zz)) for zz in z])
    return PotentialCurve("perreault", "z^-3 image-dipole form", "perreault",
                          CONVENTION_FIELD_ALIGNED, "z_m", z, vals)


def _undriven_curve(z: np.ndarray) -> PotentialCurve:
    atom = sodium_atom()
    vals = np.array([u_cp_undriven_excited(atom, float(zz)) for zz in z])
    return PotentialCurve("undriven", "undriven excited atom", "undriven",
                          CONVENTION_X_THIRD, "z_m", z, vals)


def _bloch_curve(key: str, label: str, detuning_scale: float, z: np.ndarray) -> PotentialCurve:
    # Time-averaged printed resonant form; the population-weighted mode with
    # the nonresonant integrals is available through the CLI bloch route.
    sys = sodium_system(detuning_scale=detuning_scale)
    vals = np.array([u_lcp_bloch(sys, float(zz), t=None, mode="resonant") for zz in z])
    return PotentialCurve(key, label, "bloch", CONVENTION_X_THIRD, "z_m", z, vals)


def _bloch_time_curve(z_fixed: float, t: np.ndarray) -> PotentialCurve:
    sys = sodium_system()
    vals = np.array([u_lcp_bloch(sys, z_fixed, t=float(tt), mode="resonant") for tt in t])
    key = f"bloch_z{z_fixed:.0e}"
    return PotentialCurve(key, f"z = {z_fixed:.0e} m", "bloch", CONVENTION_X_THIRD,
                          "t_s", t, vals, z=z_fixed)


def figure_curves(
    figure_id: int,
    n_points: int = DEFAULT_N_POINTS,
    z_min: float = DEFAULT_Z_MIN,
    z_max: float = DEFAULT_Z_MAX,
) -> list[PotentialCurve]:
    """Curve set of one figure preset.

    1: full perturbative vs its z^-3-only form.
    2: perturbative at detunings x5, x2, x1 vs the undriven potential.
    3: Bloch (averaged resonant) at detunings x0.1, x10, x1 vs undriven.
    4: Bloch potential over time at z = 1e-7 m and 2e-7 m.
    5: perturbative vs Bloch (averaged) vs undriven at the reference detuning.
    """
    if figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {figure_id!r}; expected one of {FIGURE_IDS}")
    z = default_z_grid(n_points, z_min, z_max)
    if figure_id == 1:
        return [
            _pert_curve("pert_full", "full driven potential", 1.0, z),
            _perreault_curve(z),
        ]
    if figure_id == 2:
        return [
            _pert_curve("pert_5x", "detuning x5", 5.0, z),
            _pert_curve("pert_2x", "detuning x2", 2.0, z),
            _pert_curve("pert_1x", "detuning x1", 1.0, z),
            _undriven_curve(z),
        ]
    if figure_id == 3:
        return [
            _bloch_curve("bloch_0.1x", "detuning x0.1", 0.1, z),
            _bloch_curve("bloch_10x", "detuning x10", 10.0, z),
            _bloch_curve("bloch_1x", "detuning x1", 1.0, z),
            _undriven_curve(z),
        ]
    if figure_id == 4:
        t = default_t_grid(n_points)
        return [_bloch_time_curve(zf, t) for zf in FIG4_DISTANCES]
    return [
        _pert_curve("pert", "driven, initial-state route", 1.0, z),
        _bloch_curve("bloch", "driven, Bloch route (averaged)", 1.0, z),
        _undriven_curve(z),
    ]


def expected_curve_count(figure_id: int) -> int:
    return {1: 2, 2: 4, 3: 4, 4: 2, 5: 3}[figure_id]
