"""Pure-Python numeric kernels: AGM, joint wp/wp' evaluation, lattice sum.

Mirror of the compiled `_core` extension; `_backend` picks whichever is
available. Keep the two implementations algorithmically identical; tests
assert they agree to near machine precision.
"""
from __future__ import annotations

import math

# Laurent coefficient count (c_2..c_KMAX). The halving radius keeps the term
# ratio <= 0.16, so 40 coefficients reach far below the 1e-18 cutoff.
KMAX = 40

# kernel status flags shared with the compiled backend
OK = 0
POLE = 1
HALF_RE = 2   # congruent to omega1        -> wp = e1, wp' = 0
HALF_IM = 3   # congruent to omega2        -> wp = e3, wp' = 0
HALF_BOTH = 4  # congruent to omega1+omega2 -> wp = e2, wp' = 0


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of positive a, b."""
    for _ in range(64):
        if abs(a - b) <= 4.0 * math.ulp(abs(a)):
            return a
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise RuntimeError("AGM did not converge within 64 iterations")


def _round_half_to_zero(x: float) -> float:
    r = math.ceil(abs(x) - 0.5)
    return float(r) if x >= 0.0 else float(-r)


_coeff_cache: dict = {}


def _laurent_coeffs(g2: float, g3: float) -> tuple:
    key = (g2, g3)
    cached = _coeff_cache.get(key)
    if cached is not None:
        return cached
    c = [0.0] * (KMAX + 1)
    c[2] = g2 / 20.0
    c[3] = g3 / 28.0
    for k in range(4, KMAX + 1):
        s = 0.0
        for m in range(2, k - 1):
            s += c[m] * c[k - m]
        c[k] = 3.0 * s / ((2 * k + 1) * (k - 3))
    if len(_coeff_cache) > 64:
        _coeff_cache.clear()
    out = tuple(c)
    _coeff_cache[key] = out
    return out


def _series(u: complex, coeffs: tuple) -> tuple:
    """Laurent series wp(u) = 1/u^2 + sum c_k u^(2k-2) and its derivative."""
    u2 = u * u
    p = 1.0 / u2
    dp = -2.0 / (u2 * u)
    zpow = u2          # u^(2k-2), starting at k = 2
    zpow_d = u         # u^(2k-3)
    for k in range(2, KMAX + 1):
        ck = coeffs[k]
        t = ck * zpow
        p += t
        dp += (2 * k - 2) * ck * zpow_d
        if abs(t) <= 1e-18 * abs(p):
            break
        zpow *= u2
        zpow_d *= u2
    return p, dp


def wp_pair(z: complex, w1: float, w2i: float, g2: float, g3: float):
    """(wp(z), wp'(z), flag) for the rectangular lattice (2*w1, 2i*w2i).

    flag: OK, POLE, or one of the HALF_* codes; values are only meaningful
    for OK (the caller substitutes exact root values for HALF_*).
    """
    per_min = 2.0 * w1 if w1 <= w2i else 2.0 * w2i
    eps = 1e-12 * per_min
    x = z.real - 2.0 * w1 * _round_half_to_zero(z.real / (2.0 * w1))
    y = z.imag - 2.0 * w2i * _round_half_to_zero(z.imag / (2.0 * w2i))
    if math.hypot(x, y) <= eps:
        return 0j, 0j, POLE
    gx = w1 - abs(x)   # gap to the vertical cell edge
    gy = w2i - abs(y)
    if math.hypot(gx, y) <= eps:
        return 0j, 0j, HALF_RE
    if math.hypot(x, gy) <= eps:
        return 0j, 0j, HALF_IM
    if math.hypot(gx, gy) <= eps:
        return 0j, 0j, HALF_BOTH

    r0 = 0.4 * per_min
    r = math.hypot(x, y)
    h = 0
    while r > r0:
        r *= 0.5
        h += 1
    u = complex(x, y) / float(2 ** h)
    p, dp = _series(u, _laurent_coeffs(g2, g3))
    for _ in range(h):
        lam = (6.0 * p * p - 0.5 * g2) / (2.0 * dp)
        p, dp = lam * lam - 2.0 * p, lam * (6.0 * p - 2.0 * lam * lam) - dp
    return p, dp, OK


def lattice_sum(z: complex, w1: float, w2i: float, cutoff: int) -> complex:
    """Direct Eisenstein-style sum 1/z^2 + sum [1/(z-w)^2 - 1/w^2] in
    growing-shell order over w = 2*m*w1 + 2i*n*w2i, 0 < max(|m|,|n|) <= cutoff."""
    acc = 1.0 / (z * z)
    tw1 = 2.0 * w1
    tw2 = 2.0 * w2i
    for s in range(1, cutoff + 1):
        ring = 0j
        for m in range(-s, s + 1):
            wr = tw1 * m
            for n in (s, -s):
                w = complex(wr, tw2 * n)
                dz = z - w
                ring += 1.0 / (dz * dz) - 1.0 / (w * w)
        for n in range(-(s - 1), s):
            wi = tw2 * n
            for m in (s, -s):
                w = complex(tw1 * m, wi)
                dz = z - w
                ring += 1.0 / (dz * dz) - 1.0 / (w * w)
        acc += ring
    return acc
