import math

import pytest
from hypothesis import given, strategies as st

from drivencp import (
    Alignment,
    AtomParams,
    CONST,
    DomainError,
    LaserParams,
    build_driven_system,
    field_to_intensity,
    intensity_to_field,
)


def test_constants_em_consistency():
    # mu0 eps0 c^2 = 1 ties the three electromagnetic constants together
    assert abs(CONST.mu0 * CONST.eps0 * CONST.c**2 - 1.0) < 1e-12
    CONST.check()


def test_intensity_to_field_zero():
    assert intensity_to_field(0.0) == 0.0


def test_intensity_to_field_reference_value():
    # 5 W/cm^2 = 5e4 W/m^2; E0 = sqrt(2 I / (eps0 c))
    e0 = intensity_to_field(5e4)
    assert e0 == pytest.approx(6137.836049185982, rel=1e-12)
    assert e0 == pytest.approx(6.14e3, rel=1e-3)


def test_intensity_round_trip():
    for intensity in (1e-6, 1.0, 5e4, 3.7e9):
        assert field_to_intensity(intensity_to_field(intensity)) == pytest.approx(intensity, rel=1e-12)


def test_intensity_negative_rejected():
    with pytest.raises(DomainError):
        intensity_to_field(-1.0)
    with pytest.raises(DomainError):
        field_to_intensity(-1.0)


@given(st.floats(min_value=1e-8, max_value=1e8), st.floats(min_value=1.01, max_value=100.0))
def test_intensity_to_field_monotone_square_linear(intensity, factor):
    lo = intensity_to_field(intensity)
    hi = intensity_to_field(intensity * factor)
    assert hi > lo
    # E0^2 is linear in I
    assert hi**2 / lo**2 == pytest.approx(factor, rel=1e-12)


def test_atom_params_validation():
    with pytest.raises(DomainError):
        AtomParams(d=0.0, omega10=1e15)
    with pytest.raises(DomainError):
        AtomParams(d=1e-29, omega10=-1e15)
    with pytest.raises(DomainError):
        AtomParams(d=math.nan, omega10=1e15)


def test_laser_params_validation():
    with pytest.raises(DomainError):
        LaserParams(omega_l=0.0, e0=1.0)
    with pytest.raises(DomainError):
        LaserParams(omega_l=1e15, e0=-1.0)
    with pytest.raises(DomainError):
        LaserParams(omega_l=1e15, e0=1.0, theta=2.0)


def test_build_driven_system_undriven():
    atom = AtomParams(d=3.71e-29, omega10=3.24e15)
    laser = LaserParams(omega_l=3.3e15, e0=0.0)
    sys = build_driven_system(atom, laser)
    assert sys.omega_rabi == 0.0
    assert sys.delta == 3.3e15 - 3.24e15
    assert sys.omega_dressed == abs(sys.delta)


def test_build_driven_system_sodium_ratio(na_system):
    # Parallel alignment reproduces Delta / Omega = 0.29 for the reference drive
    ratio = na_system.delta / na_system.omega_rabi
    assert ratio == pytest.approx(0.2909824767, rel=1e-9)
    assert ratio == pytest.approx(0.29, rel=0.03)


def test_build_driven_system_resonance():
    atom = AtomParams(d=3.71e-29, omega10=3.24e15)
    laser = LaserParams(omega_l=3.24e15, e0=100.0)
    sys = build_driven_system(atom, laser)
    assert sys.delta == 0.0
    assert sys.omega_dressed == sys.omega_rabi


def test_alignment_effective_dipole():
    d = 3.71e-29
    assert Alignment.PARALLEL.effective_dipole(d) == d
    assert Alignment.ISOTROPIC.effective_dipole(d) == pytest.approx(d / math.sqrt(3), rel=1e-15)


@given(
    st.floats(min_value=1e-31, max_value=1e-27),
    st.floats(min_value=1e14, max_value=1e16),
    st.floats(min_value=1e13, max_value=1e17),
    st.floats(min_value=0.0, max_value=1e7),
    st.sampled_from(list(Alignment)),
)
def test_dressed_frequency_dominates(d, omega10, omega_l, e0, alignment):
    sys = build_driven_system(AtomParams(d=d, omega10=omega10),
                              LaserParams(omega_l=omega_l, e0=e0), alignment)
    assert sys.omega_dressed >= abs(sys.delta)
    assert sys.omega_dressed >= sys.omega_rabi
    assert sys.omega_dressed**2 == pytest.approx(sys.delta**2 + sys.omega_rabi**2, rel=1e-12)
