"""Parameter records for the driven two-level atom and the derived drive quantities.

All types are immutable value objects (safe to share between threads).  Two
dipole-orientation conventions appear in the closed-form potentials, so the
choice is explicit rather than baked in:

* ``Alignment.PARALLEL``  - dipole aligned with the driving field, full d
  enters the Rabi frequency.
* ``Alignment.ISOTROPIC`` - orientation-averaged dipole, d/sqrt(3) enters
  (equivalently d^2/3 in every quadratic expression).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import CONST
from .errors import DomainError


class Alignment(enum.Enum):
    PARALLEL = "parallel"
    ISOTROPIC = "isotropic"

    def effective_dipole(self, d: float) -> float:
        if self is Alignment.PARALLEL:
            return d
        return d / math.sqrt(3.0)


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class AtomParams:
    """Two-level atom: dipole magnitude [C m] and shifted transition frequency [rad/s]."""

    d: float
    omega10: float

    def __post_init__(self) -> None:
        _require_finite("d", self.d)
        _require_finite("omega10", self.omega10)
        if self.d <= 0:
            raise DomainError(f"dipole moment must be > 0, got {self.d}")
        if self.omega10 <= 0:
            raise DomainError(f"transition frequency must be > 0, got {self.omega10}")


@dataclass(frozen=True)
class LaserParams:
    """Drive: angular frequency [rad/s], field amplitude at the atom [V/m], polarization angle.

    theta is the angle between the field direction and the surface normal (z axis);
    e0 = 0 is a valid degenerate drive (undriven atom).
    """

    omega_l: float
    e0: float
    theta: float = math.pi / 2

    def __post_init__(self) -> None:
        _require_finite("omega_l", self.omega_l)
        _require_finite("e0", self.e0)
        _require_finite("theta", self.theta)
        if self.omega_l <= 0:
            raise DomainError(f"laser frequency must be > 0, got {self.omega_l}")
        if self.e0 < 0:
            raise DomainError(f"field amplitude must be >= 0, got {self.e0}")
        if not 0.0 <= self.theta <= math.pi / 2:
            raise DomainError(f"polarization angle must lie in [0, pi/2], got {self.theta}")


def intensity_to_field(intensity: float) -> float:
    """Field amplitude E0 [V/m] of a plane wave with the given intensity [W/m^2].

    Inverts I = eps0 c E0^2 / 2.
    """
    _require_finite("intensity", intensity)
    if intensity < 0:
        raise DomainError(f"intensity must be >= 0, got {intensity}")
    return math.sqrt(2.0 * intensity / (CONST.eps0 * CONST.c))


def field_to_intensity(e0: float) -> float:
    """Intensity [W/m^2] carried by a plane wave of amplitude e0 [V/m]."""
    _require_finite("e0", e0)
    if e0 < 0:
        raise DomainError(f"field amplitude must be >= 0, got {e0}")
    return CONST.eps0 * CONST.c * e0**2 / 2.0


@dataclass(frozen=True)
class DrivenSystem:
    """Atom + laser + derived couple: Rabi frequency, detuning, dressed frequency."""

    atom: AtomParams
    laser: LaserParams
    alignment: Alignment
    omega_rabi: float
    delta: float
    omega_dressed: float

    def __post_init__(self) -> None:
        lhs = self.omega_dressed**2
        rhs = self.delta**2 + self.omega_rabi**2
        scale = max(lhs, rhs, 1.0)
        if abs(lhs - rhs) > 4e-16 * scale:
            raise DomainError("dressed frequency inconsistent with (delta, omega_rabi)")


def build_driven_system(
    atom: AtomParams,
    laser: LaserParams,
    alignment: Alignment = Alignment.PARALLEL,
) -> DrivenSystem:
    """Assemble the derived drive quantities.

    Omega = E0 d_eff / hbar with d_eff set by the alignment convention,
    Delta = omega_l - omega10 (signed; blue detuning is positive),
    dressed frequency = sqrt(Delta^2 + Omega^2).
    """
    d_eff = alignment.effective_dipole(atom.d)
    omega_rabi = laser.e0 * d_eff / CONST.hbar
    delta = laser.omega_l - atom.omega10
    omega_dressed = math.hypot(delta, omega_rabi)
    return DrivenSystem(
        atom=atom,
        laser=laser,
        alignment=alignment,
        omega_rabi=omega_rabi,
        delta=delta,
        omega_dressed=omega_dressed,
    )


# Reference sodium drive used by every figure preset: a Na atom
# (d = 3.71e-29 C m, shifted D-line frequency 3.24e15 rad/s) driven at
# 5 W/cm^2, blue-detuned by 2 pi x 100 MHz, field polarized along the surface.
SODIUM_DIPOLE = 3.71e-29          # C m
SODIUM_OMEGA10 = 3.24e15          # rad/s
REFERENCE_DETUNING = 2.0 * math.pi * 1.0e8   # rad/s
REFERENCE_INTENSITY = 5.0e4       # W/m^2 (= 5 W/cm^2)


def sodium_atom() -> AtomParams:
    return AtomParams(d=SODIUM_DIPOLE, omega10=SODIUM_OMEGA10)


def sodium_laser(
    detuning_scale: float = 1.0,
    intensity: float = REFERENCE_INTENSITY,
    theta: float = math.pi / 2,
) -> LaserParams:
    """Drive laser of the presets; detuning_scale multiplies the reference detuning."""
    return LaserParams(
        omega_l=SODIUM_OMEGA10 + detuning_scale * REFERENCE_DETUNING,
        e0=intensity_to_field(intensity),
        theta=theta,
    )


def sodium_system(
    detuning_scale: float = 1.0,
    alignment: Alignment = Alignment.PARALLEL,
    intensity: float = REFERENCE_INTENSITY,
    theta: float = math.pi / 2,
) -> DrivenSystem:
    return build_driven_system(sodium_atom(), sodium_laser(detuning_scale, intensity, theta), alignment)
