import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from drivencp import CONST, DomainError, greens_nonretarded, greens_scattering
from drivencp.greens import MIN_DISTANCE, greens_diag_imaginary


def _oracle(z, omega, dps=50):
    """50-digit evaluation of the same closed form, written independently in mpmath."""
    with mp.workdps(dps):
        zz = mp.mpf(z)
        w = mp.mpc(omega)
        c = mp.mpf(CONST.c)
        rho = c / (w * zz)
        phase = mp.e ** (2j * w * zz / c)
        gxx = w / (32 * mp.pi * c) * (rho**3 - 2j * rho**2 - 4 * rho) * phase
        gzz = w / (16 * mp.pi * c) * (rho**3 - 2j * rho**2) * phase
        return complex(gxx), complex(gzz)


# Moderate ranges keep e^(2 i omega z / c) away from overflow for complex omega.
z_strategy = st.floats(min_value=1e-9, max_value=1e-6)
omega_real = st.floats(min_value=1e12, max_value=1e16)
omega_complex = st.builds(
    complex,
    st.floats(min_value=-1e16, max_value=1e16).filter(lambda x: abs(x) > 1e10),
    st.floats(min_value=-1e16, max_value=1e16),
)


@given(z=z_strategy, omega=omega_complex)
def test_gxx_equals_gyy_bit_exact(z, omega):
    g = greens_scattering(z, omega)
    assert g.gxx == g.gyy


def test_imaginary_axis_components_real():
    g = greens_scattering(1e-7, 1j * 1e15)
    assert g.gxx.imag == 0.0
    assert g.gzz.imag == 0.0
    assert g.gxx.real < 0  # attractive sign on the imaginary axis


def test_against_high_precision_oracle():
    for z, omega in [(1e-7, 3.24e15), (3e-8, 1.1e15), (2e-6, 7.7e14), (1e-7, 1j * 1e15)]:
        g = greens_scattering(z, omega)
        oxx, ozz = _oracle(z, omega)
        assert g.gxx == pytest.approx(oxx, rel=1e-13)
        assert g.gzz == pytest.approx(ozz, rel=1e-13)


def test_frozen_golden_point():
    # Values frozen from the 50-digit oracle at (z, omega) = (1e-7 m, 3.24e15 rad/s)
    g = greens_scattering(1e-7, 3.24e15)
    assert g.gxx == pytest.approx(327056.84224148702 - 157211.9617112116j, rel=1e-12)
    assert g.gzz == pytest.approx(210913.54344619103 + 346508.01917801337j, rel=1e-12)


def test_domain_errors():
    with pytest.raises(DomainError):
        greens_scattering(0.0, 1e15)
    with pytest.raises(DomainError):
        greens_scattering(-1e-7, 1e15)
    with pytest.raises(DomainError):
        greens_scattering(5e-11, 1e15)  # below the near-contact guard
    with pytest.raises(DomainError):
        greens_scattering(1e-7, 0.0)
    with pytest.raises(DomainError):
        greens_nonretarded(1e-7, 0.0)
    assert MIN_DISTANCE == 1e-10


def test_nonretarded_zz_double_xx():
    g = greens_nonretarded(1e-7, 3.24e15)
    assert g.gzz == pytest.approx(2.0 * g.gxx, rel=1e-15)
    assert g.gxx == g.gyy


def test_nonretarded_matches_full_at_small_argument():
    omega = 1e14
    z = 1e-3 * CONST.c / omega  # omega z / c = 1e-3, z still above the contact guard
    full = greens_scattering(z, omega)
    approx = greens_nonretarded(z, omega)
    assert abs(full.gzz.real - approx.gzz.real) / abs(full.gzz.real) < 1e-2
    assert abs(full.gxx.real - approx.gxx.real) / abs(full.gxx.real) < 1e-2


@settings(max_examples=50)
@given(z=z_strategy, omega=omega_complex)
def test_schwarz_reflection(z, omega):
    g = greens_scattering(z, omega)
    mirrored = greens_scattering(z, -omega.conjugate())
    assert mirrored.gxx == pytest.approx(g.gxx.conjugate(), rel=1e-12)
    assert mirrored.gzz == pytest.approx(g.gzz.conjugate(), rel=1e-12)


@settings(max_examples=50)
@given(z=z_strategy, omega=omega_real, lam=st.sampled_from([2.0, 10.0]))
def test_scaling_property(z, omega, lam):
    g = greens_scattering(z, omega)
    scaled = greens_scattering(lam * z, omega / lam)
    assert lam * scaled.gxx == pytest.approx(g.gxx, rel=1e-12)
    assert lam * scaled.gzz == pytest.approx(g.gzz, rel=1e-12)


def test_imaginary_axis_monotone_decay():
    z = 1e-7
    xi = np.logspace(math.log10(CONST.c / (2 * z)), math.log10(100 * CONST.c / (2 * z)), 200)
    mags = [abs(greens_scattering(z, 1j * float(x)).gxx) for x in xi]
    assert all(a > b for a, b in zip(mags, mags[1:]))


def test_vectorized_imaginary_matches_scalar():
    z = 2.3e-7
    xi = np.logspace(12, 17, 40)
    gxx, gzz = greens_diag_imaginary(z, xi)
    for i, x in enumerate(xi):
        g = greens_scattering(z, 1j * float(x))
        assert gxx[i] == pytest.approx(g.gxx.real, rel=1e-13)
        assert gzz[i] == pytest.approx(g.gzz.real, rel=1e-13)
