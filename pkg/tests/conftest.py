import math

import pytest

from octell import compute_lattice, derive_params

GOLDEN_BETA = (3.0 + math.sqrt(5.0)) / 2.0

# the beta values exercised throughout: small, moderate, golden-ratio square,
# a bracket around the branch-switch constant, and two larger ones
SAMPLE_BETAS = (1.2, 1.5, GOLDEN_BETA, 1.7892867552141611, 1.8392867552141611,
                1.8892867552141611, 3.0, 10.0)


def node_z(lat, m, n):
    return complex(m * lat.omega1 / 4.0, n * lat.omega2_im / 4.0)


@pytest.fixture(scope="session")
def p3():
    return derive_params(3.0)


@pytest.fixture(scope="session")
def lat3(p3):
    return compute_lattice(p3)


@pytest.fixture(scope="session")
def pg():
    return derive_params(GOLDEN_BETA)


@pytest.fixture(scope="session")
def latg(pg):
    return compute_lattice(pg)
