"""Two-level atomic polarizability in its complex, real, isotropic and
large-detuning forms.

With both damping rates set to zero (the regime every closed-form potential
here uses) the polarizability is real away from resonance; evaluation exactly
on the undamped resonance raises PoleError rather than regularizing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .constants import CONST
from .errors import DomainError, PoleError
from .params import Alignment, AtomParams


class PolarizabilityForm(enum.Enum):
    COMPLEX_FULL = "complex_full"
    REAL_TWO_LEVEL = "real_two_level"
    ISOTROPIC_REAL = "isotropic_real"
    DETUNING_APPROX = "detuning_approx"


@dataclass(frozen=True)
class Polarizability:
    """Isotropic prefactor of the unit tensor [C^2 m^2 / J]."""

    value: complex
    form: PolarizabilityForm

    @property
    def real_value(self) -> float:
        if self.value.imag != 0.0:
            raise DomainError(f"{self.form.value} polarizability is not real: {self.value!r}")
        return self.value.real


def alpha_complex(
    atom: AtomParams,
    gamma_sum: float,
    omega: complex,
    alignment: Alignment = Alignment.PARALLEL,
) -> Polarizability:
    """Damped two-level form:

        (d_eff^2/hbar) [ 1/(omega10 - omega - i gamma/2) + 1/(omega10 + omega + i gamma/2) ]

    satisfying alpha(-omega*) = alpha(omega)*.
    """
    if gamma_sum < 0:
        raise DomainError(f"damping rate sum must be >= 0, got {gamma_sum}")
    w = complex(omega)
    d2 = alignment.effective_dipole(atom.d) ** 2
    den_minus = atom.omega10 - w - 0.5j * gamma_sum
    den_plus = atom.omega10 + w + 0.5j * gamma_sum
    if den_minus == 0 or den_plus == 0:
        raise PoleError("undamped polarizability evaluated exactly on resonance")
    value = (d2 / CONST.hbar) * (1.0 / den_minus + 1.0 / den_plus)
    return Polarizability(value=value, form=PolarizabilityForm.COMPLEX_FULL)


def alpha_real(atom: AtomParams, omega_l: float) -> Polarizability:
    """Undamped parallel-dipole form 2 omega10 d^2 / (hbar (omega10^2 - omega_l^2))."""
    den = atom.omega10**2 - omega_l**2
    if den == 0:
        raise PoleError("polarizability pole at omega_l = omega10")
    value = 2.0 * atom.omega10 * atom.d**2 / (CONST.hbar * den)
    return Polarizability(value=complex(value, 0.0), form=PolarizabilityForm.REAL_TWO_LEVEL)


def alpha_isotropic(atom: AtomParams, omega_l: float) -> Polarizability:
    """Orientation-averaged form, one third of the parallel one."""
    den = atom.omega10**2 - omega_l**2
    if den == 0:
        raise PoleError("polarizability pole at omega_l = omega10")
    value = 2.0 * atom.omega10 * atom.d**2 / (3.0 * CONST.hbar * den)
    return Polarizability(value=complex(value, 0.0), form=PolarizabilityForm.ISOTROPIC_REAL)


def alpha_detuning(atom: AtomParams, delta: float) -> Polarizability:
    """Small-detuning approximation -d^2 / (3 hbar Delta) of the isotropic form."""
    if delta == 0:
        raise PoleError("detuning approximation diverges at Delta = 0")
    value = -atom.d**2 / (3.0 * CONST.hbar * delta)
    return Polarizability(value=complex(value, 0.0), form=PolarizabilityForm.DETUNING_APPROX)
