import math

import pytest

from drivencp import (
    Alignment,
    LaserParams,
    build_driven_system,
    sodium_atom,
    sodium_laser,
    sodium_system,
)


@pytest.fixture(scope="session")
def na_atom():
    return sodium_atom()


@pytest.fixture(scope="session")
def na_system():
    return sodium_system()


@pytest.fixture(scope="session")
def na_system_iso():
    return sodium_system(alignment=Alignment.ISOTROPIC)


def system_with_ratio(ratio: float, alignment: Alignment = Alignment.PARALLEL,
                      theta: float = math.pi / 2):
    """Reference drive retuned so Delta / Omega equals `ratio` under `alignment`."""
    atom = sodium_atom()
    base = build_driven_system(atom, sodium_laser(theta=theta), alignment)
    laser = LaserParams(omega_l=atom.omega10 + ratio * base.omega_rabi,
                        e0=base.laser.e0, theta=theta)
    return build_driven_system(atom, laser, alignment)
