"""Casimir-Polder potential of a laser-driven two-level atom near a perfect mirror.

Two independent routes to the driven potential (a perturbative
initial-state route and an optical-Bloch-equation route), the undriven
reference potential, and the numerical machinery they share: the mirror
Green's tensor, two-level polarizabilities, analytic Bloch dynamics with an
RK4 oracle, and semi-infinite imaginary-frequency quadrature.
"""

__version__ = "0.1.0"

from .constants import CONST, PhysicalConstants
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    PoleError,
    ResolutionError,
)
from .params import (
    Alignment,
    AtomParams,
    DrivenSystem,
    LaserParams,
    build_driven_system,
    field_to_intensity,
    intensity_to_field,
    sodium_atom,
    sodium_laser,
    sodium_system,
)
from .greens import GreensValue, greens_nonretarded, greens_scattering
from .polarizability import (
    Polarizability,
    PolarizabilityForm,
    alpha_complex,
    alpha_detuning,
    alpha_isotropic,
    alpha_real,
)
from .bloch import (
    BlochState,
    bloch_analytic,
    bloch_ode_oracle,
    bloch_ode_trajectory,
    correlation_functions,
    dipole_bloch,
)
from .quadrature import (
    QuadratureResult,
    integrate_nonresonant,
    nonresonant_integrand,
    riemann_reference,
)
from .potentials import (
    PotentialRoute,
    PotentialSample,
    U_LIGHT_SODIUM_LITERATURE,
    resonant_excited_term,
    u0_u1,
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
from .figures import PotentialCurve, default_z_grid, expected_curve_count, figure_curves

__all__ = [name for name in dir() if not name.startswith("_")]
