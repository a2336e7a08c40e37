import cmath
import math
import random

import pytest

from octell import (
    POLE,
    compute_lattice,
    derive_params,
    essential_R,
    is_pole,
    log_deriv_sq,
    wp,
    wp_lattice_sum_oracle,
    wp_prime,
    wp_with_prime,
)
from conftest import SAMPLE_BETAS, node_z


def cell_points(lat, count, seed):
    """Deterministic points inside the period cell, away from the lattice."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        x = rng.uniform(0.04, 0.96) * 2.0 * lat.omega1
        y = rng.uniform(0.04, 0.96) * 2.0 * lat.omega2_im
        pts.append(complex(x, y))
    return pts


def test_poles_at_lattice_points(p3, lat3):
    for z in (0j, 2.0 * lat3.omega1 + 0j, complex(0.0, 2.0 * lat3.omega2_im),
              complex(4.0 * lat3.omega1, -2.0 * lat3.omega2_im)):
        assert is_pole(wp(z, lat3, p3))
        assert is_pole(wp_prime(z, lat3, p3))
        assert is_pole(essential_R(z, lat3, p3))


def test_half_period_values_exact(p3, lat3):
    w1 = lat3.omega1
    w2 = lat3.omega2
    assert wp(w1 + 0j, lat3, p3) == complex(p3.e1)
    assert wp(w2, lat3, p3) == complex(p3.e3)
    assert wp(w1 + w2, lat3, p3) == complex(p3.e2)
    for h in (w1 + 0j, w2, w1 + w2):
        assert wp_prime(h, lat3, p3) == 0j
    # shifted function: 0, -beta, -1/beta (up to the e_i - alpha rounding)
    assert essential_R(w1 + 0j, lat3, p3) == 0j
    assert essential_R(w2, lat3, p3) == pytest.approx(-3.0, rel=1e-15)
    assert essential_R(w1 + w2, lat3, p3) == pytest.approx(-1.0 / 3.0, rel=1e-14)


@pytest.mark.parametrize("beta", [1.5, 3.0, 10.0])
def test_periodicity(beta):
    p = derive_params(beta)
    lat = compute_lattice(p)
    for z in cell_points(lat, 6, seed=11):
        v = wp(z, lat, p)
        for shift in (2.0 * lat.omega1, 2.0 * lat.omega2, 2.0 * lat.omega1 + 2.0 * lat.omega2):
            v2 = wp(z + shift, lat, p)
            assert v2 == pytest.approx(v, rel=1e-10)


def test_even_and_odd(p3, lat3):
    for z in cell_points(lat3, 8, seed=5):
        assert wp(-z, lat3, p3) == pytest.approx(wp(z, lat3, p3), rel=1e-12)
        assert wp_prime(-z, lat3, p3) == pytest.approx(-wp_prime(z, lat3, p3), rel=1e-12)


def test_schwarz_reflection_is_exact(p3, lat3):
    # all kernel arithmetic is sign-symmetric in the imaginary part, so
    # conjugation commutes bit for bit
    for z in cell_points(lat3, 10, seed=7):
        assert wp(z.conjugate(), lat3, p3) == wp(z, lat3, p3).conjugate()
        assert essential_R(z.conjugate(), lat3, p3) == essential_R(z, lat3, p3).conjugate()


@pytest.mark.parametrize("beta", SAMPLE_BETAS)
def test_ode_residual(beta):
    # R'^2 = 4 R (R + beta) (R + 1/beta)
    p = derive_params(beta)
    lat = compute_lattice(p)
    for z in cell_points(lat, 40, seed=int(beta * 1000)):
        pair = wp_with_prime(z, lat, p)
        r = pair[0] - p.alpha
        dr = pair[1]
        resid = abs(dr * dr - 4.0 * r * (r + beta) * (r + 1.0 / beta))
        assert resid <= 1e-8 * (1.0 + abs(r) ** 3)


def test_derivative_matches_finite_difference(p3, lat3):
    h = 1e-5
    for z in cell_points(lat3, 6, seed=3):
        fd = (wp(z + h, lat3, p3) - wp(z - h, lat3, p3)) / (2.0 * h)
        dp = wp_prime(z, lat3, p3)
        assert fd == pytest.approx(dp, rel=5e-7)


def test_wp_with_prime_consistent(p3, lat3):
    z = complex(0.61, 0.47)
    v, dv = wp_with_prime(z, lat3, p3)
    assert v == wp(z, lat3, p3)
    assert dv == wp_prime(z, lat3, p3)


def test_essential_shift(p3, lat3):
    for z in cell_points(lat3, 5, seed=9):
        assert essential_R(z, lat3, p3) == pytest.approx(
            wp(z, lat3, p3) - p3.alpha, rel=1e-14
        )


# --- lattice-sum cross-check ------------------------------------------------

def disk_points(lat, count, seed):
    """Points within one minimal half-period of the expansion center, where
    the truncated sum has its stated accuracy (error grows like |z|^2)."""
    rng = random.Random(seed)
    rad = min(lat.omega1, lat.omega2_im)
    pts = []
    while len(pts) < count:
        z = complex(rng.uniform(-rad, rad), rng.uniform(-rad, rad))
        if 0.1 <= abs(z) <= rad:
            pts.append(z)
    return pts


def test_lattice_sum_agrees(p3, lat3):
    for z in disk_points(lat3, 8, seed=21):
        fast = wp(z, lat3, p3)
        slow = wp_lattice_sum_oracle(z, lat3, cutoff=200)
        assert abs(slow - fast) <= 1e-6 * max(1.0, abs(fast))


def test_lattice_sum_converges_toward_fast_value(p3, lat3):
    z = complex(0.8 * lat3.omega1, 0.6 * lat3.omega2_im)
    fast = wp(z, lat3, p3)
    errs = [abs(wp_lattice_sum_oracle(z, lat3, cutoff=c) - fast)
            for c in (25, 100, 400)]
    assert errs[2] < errs[0]
    assert errs[2] <= 1e-6


def test_lattice_sum_even(lat3):
    z = complex(0.53, 0.41)
    a = wp_lattice_sum_oracle(z, lat3, cutoff=60)
    b = wp_lattice_sum_oracle(-z, lat3, cutoff=60)
    assert a == pytest.approx(b, rel=1e-12)


def test_lattice_sum_rejects_bad_input(lat3):
    with pytest.raises(ValueError):
        wp_lattice_sum_oracle(complex(0.5, 0.5), lat3, cutoff=5)
    with pytest.raises(ValueError):
        wp_lattice_sum_oracle(0j, lat3, cutoff=50)
    with pytest.raises(ValueError):
        wp_lattice_sum_oracle(2.0 * lat3.omega1 + 0j, lat3, cutoff=50)


# --- log-derivative ---------------------------------------------------------

def test_log_deriv_sq_value(p3, lat3):
    for z in cell_points(lat3, 5, seed=2):
        r = essential_R(z, lat3, p3)
        dr = wp_prime(z, lat3, p3)
        assert log_deriv_sq(z, lat3, p3) == pytest.approx((dr / r) ** 2, rel=1e-12)


def test_log_deriv_sq_at_center_is_4d(p3, lat3):
    z = (lat3.omega1 + lat3.omega2) / 2.0
    assert log_deriv_sq(z, lat3, p3) == pytest.approx(4.0 * p3.d, rel=1e-11)


def test_log_deriv_sq_rejects_zeros_and_poles(p3, lat3):
    with pytest.raises(ValueError):
        log_deriv_sq(0j, lat3, p3)          # pole of R
    with pytest.raises(ValueError):
        log_deriv_sq(lat3.omega1 + 0j, lat3, p3)  # zero of R


def test_rejects_non_finite(p3, lat3):
    for bad in (complex(math.nan, 0.0), complex(0.0, math.inf)):
        with pytest.raises(ValueError):
            wp(bad, lat3, p3)


def test_near_pole_magnitude(p3, lat3):
    # just outside the pole guard the series still behaves like 1/z^2
    z = complex(1e-5, 1e-5)
    v = wp(z, lat3, p3)
    assert v == pytest.approx(1.0 / (z * z), rel=1e-4)
