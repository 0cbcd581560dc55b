"""Physical constants, CODATA 2018, strict SI.

Hard-coded (no runtime configuration) so that every run of the engine is
reproducible bit for bit.  All angular frequencies elsewhere in the package
are rad/s; a detuning quoted as "2 pi x 100 MHz" enters as 6.2832e8 rad/s.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    c: float      # speed of light in vacuum [m/s], exact
    hbar: float   # reduced Planck constant [J s]
    eps0: float   # vacuum permittivity [F/m]
    mu0: float    # vacuum permeability [N/A^2]

    def check(self, rel_tol: float = 1e-12) -> None:
        """Consistency of the electromagnetic constants: mu0 eps0 c^2 = 1."""
        residual = self.mu0 * self.eps0 * self.c**2 - 1.0
        if abs(residual) > rel_tol:
            raise AssertionError(f"mu0*eps0*c^2 - 1 = {residual:.3e}")


CONST = PhysicalConstants(
    c=299792458.0,
    hbar=1.05457181765e-34,
    eps0=8.8541878128e-12,
    mu0=1.25663706212e-6,
)
