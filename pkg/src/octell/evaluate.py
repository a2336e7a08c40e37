"""Evaluation of wp, wp' and the shifted function R = wp - alpha.

R satisfies R'^2 = 4 R (R + beta) (R + 1/beta); its value at a lattice point
is the distinguished POLE marker rather than an error. The evaluator reduces
into the fundamental cell, runs the Laurent series inside the safe radius and
doubles back out with the duplication formula; `wp_lattice_sum_oracle` is the
slow independent cross-check.
"""
from __future__ import annotations

import math
from typing import Union

from . import _backend
from ._pycore import _round_half_to_zero
from .lattice import Lattice
from .params import CurveParams


class _Pole:
    """Marker value for lattice points (the double pole)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "POLE"


POLE = _Pole()

NodeValue = Union[complex, _Pole]


def is_pole(value: NodeValue) -> bool:
    return value is POLE


def _check_z(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"z must have finite components, got {z!r}")
    return z


def wp_with_prime(z: complex, lat: Lattice, par: CurveParams):
    """(wp(z), wp'(z)) sharing one reduction; both POLE at lattice points."""
    z = _check_z(z)
    p, dp, flag = _backend.wp_pair(z, lat.omega1, lat.omega2_im, par.g2, par.g3)
    if flag == _backend.OK:
        return p, dp
    if flag == _backend.POLE_FLAG:
        return POLE, POLE
    if flag == _backend.HALF_RE:
        return complex(par.e1), 0j
    if flag == _backend.HALF_IM:
        return complex(par.e3), 0j
    return complex(par.e2), 0j


def wp(z: complex, lat: Lattice, par: CurveParams) -> NodeValue:
    return wp_with_prime(z, lat, par)[0]


def wp_prime(z: complex, lat: Lattice, par: CurveParams) -> NodeValue:
    return wp_with_prime(z, lat, par)[1]


def essential_R(z: complex, lat: Lattice, par: CurveParams) -> NodeValue:
    """R(z) = wp(z) - alpha, or POLE at lattice points."""
    p = wp(z, lat, par)
    if p is POLE:
        return POLE
    return p - par.alpha


def log_deriv_sq(z: complex, lat: Lattice, par: CurveParams) -> complex:
    """(R'(z)/R(z))^2. Rejects lattice points and zeros of R."""
    p, dp = wp_with_prime(z, lat, par)
    if p is POLE:
        raise ValueError("z is a lattice point (pole of R)")
    r = p - par.alpha
    if r == 0:
        raise ValueError("R(z) = 0; logarithmic derivative undefined")
    q = dp / r
    return q * q


def _is_near_lattice(z: complex, lat: Lattice) -> bool:
    w1, w2i = lat.omega1, lat.omega2_im
    per_min = 2.0 * min(w1, w2i)
    x = z.real - 2.0 * w1 * _round_half_to_zero(z.real / (2.0 * w1))
    y = z.imag - 2.0 * w2i * _round_half_to_zero(z.imag / (2.0 * w2i))
    return math.hypot(x, y) <= 1e-12 * per_min


def wp_lattice_sum_oracle(z: complex, lat: Lattice, cutoff: int) -> complex:
    """Direct lattice sum for wp(z): slow, independent of the Laurent path."""
    z = _check_z(z)
    cutoff = int(cutoff)
    if cutoff < 10:
        raise ValueError(f"cutoff must be >= 10, got {cutoff}")
    if _is_near_lattice(z, lat):
        raise ValueError("z is (numerically) a lattice point")
    return _backend.lattice_sum(z, lat.omega1, lat.omega2_im, cutoff)
