"""Scattering Green's tensor of a perfectly conducting half-space.

Closed form at coincident positions a distance z above the mirror
(reflection coefficients r_s = -1, r_p = +1), with rho = c/(omega z) and
phase factor e^(2 i omega z / c):

    G_xx = G_yy = omega/(32 pi c) * (rho^3 - 2 i rho^2 - 4 rho) * phase
    G_zz        = omega/(16 pi c) * (rho^3 - 2 i rho^2)         * phase

Off-diagonal components vanish.  The frequency argument is complex so the
same code path serves real-axis evaluation (resonant terms) and
imaginary-axis evaluation (nonresonant quadrature); at omega = i xi with
xi > 0 every factor is real and the result carries an exactly zero
imaginary part.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .constants import CONST
from .errors import DomainError

# No regularization below this distance: the closed form diverges as z^-3
# and no near-field cutoff is physically justified, so refuse instead.
MIN_DISTANCE = 1e-10  # m


@dataclass(frozen=True)
class GreensValue:
    """Diagonal scattering Green's tensor components [1/m] at (z, omega)."""

    gxx: complex
    gyy: complex
    gzz: complex
    z: float
    omega: complex


def _check_inputs(z: float, omega: complex) -> None:
    if not (z > 0) or not math.isfinite(z):
        raise DomainError(f"distance must be > 0, got {z!r}")
    if z < MIN_DISTANCE:
        raise DomainError(f"distance {z:.3e} m below near-contact guard {MIN_DISTANCE:.0e} m")
    if omega == 0:
        raise DomainError("closed form has a pole at omega = 0; take limits in the caller")
    if not (math.isfinite(omega.real if isinstance(omega, complex) else omega)
            and math.isfinite(omega.imag if isinstance(omega, complex) else 0.0)):
        raise DomainError(f"frequency must be finite, got {omega!r}")


def greens_scattering(z: float, omega: complex) -> GreensValue:
    """Evaluate the three diagonal components at distance z and complex frequency omega."""
    _check_inputs(z, omega)
    w = complex(omega)
    c = CONST.c
    rho = c / (w * z)
    phase = cmath.exp(2j * w * z / c)
    gxx = w / (32.0 * math.pi * c) * (rho**3 - 2j * rho**2 - 4.0 * rho) * phase
    gzz = w / (16.0 * math.pi * c) * (rho**3 - 2j * rho**2) * phase
    return GreensValue(gxx=gxx, gyy=gxx, gzz=gzz, z=z, omega=w)


def greens_nonretarded(z: float, omega: complex) -> GreensValue:
    """Leading rho^3 term with the phase factor set to 1 (omega z / c -> 0 limit).

    In this limit g_zz = 2 g_xx.
    """
    _check_inputs(z, omega)
    w = complex(omega)
    c = CONST.c
    rho = c / (w * z)
    gxx = w / (32.0 * math.pi * c) * rho**3
    gzz = w / (16.0 * math.pi * c) * rho**3
    return GreensValue(gxx=gxx, gyy=gxx, gzz=gzz, z=z, omega=w)


def greens_diag_imaginary(z: float, xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (g_xx, g_zz) on the imaginary frequency axis, omega = i xi.

    Same closed form with every factor written out real:

        g_xx(i xi) = -xi/(32 pi c) * (r^3 + 2 r^2 + 4 r) * e^(-2 xi z / c)
        g_zz(i xi) = -xi/(16 pi c) * (r^3 + 2 r^2)       * e^(-2 xi z / c)

    with r = c/(xi z).  Used by the brute-force quadrature reference; the
    scalar complex path is the primary implementation.
    """
    if not (z > 0) or z < MIN_DISTANCE:
        raise DomainError(f"distance must be >= {MIN_DISTANCE:.0e} m, got {z!r}")
    xi = np.asarray(xi, dtype=float)
    if np.any(xi <= 0):
        raise DomainError("imaginary-axis frequencies must be > 0")
    c = CONST.c
    r = c / (xi * z)
    damp = np.exp(-2.0 * xi * z / c)
    gxx = -(xi / (32.0 * math.pi * c)) * (r**3 + 2.0 * r**2 + 4.0 * r) * damp
    gzz = -(xi / (16.0 * math.pi * c)) * (r**3 + 2.0 * r**2) * damp
    return gxx, gzz
