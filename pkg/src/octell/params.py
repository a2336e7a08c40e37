"""Scalar constants attached to the curve R'^2 = 4 R (R + beta) (R + 1/beta).

Everything downstream is a function of the single real parameter beta > 1:
the additive shift alpha that centres the Weierstrass cubic, the root gap
d = beta - 1/beta, the circle ratio delta = sqrt(beta/d), the cubic roots
e1 > e2 > e3 and the invariants g2, g3 of 4x^3 - g2 x - g3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# gamma4 formulas contain 1/sqrt(beta-1); below this floor they still compute
# but lose digits, so catalog construction warns (construction never rejects
# any beta > 1).
BETA_FLOOR = 1.0 + 1e-6


@dataclass(frozen=True)
class CurveParams:
    beta: float
    alpha: float
    d: float
    delta: float
    e1: float
    e2: float
    e3: float
    g2: float
    g3: float
    discriminant_sqrt: float


def derive_params(beta: float) -> CurveParams:
    """Derive every scalar constant from beta.

    Raises ValueError for beta <= 1: the period lattice is only guaranteed
    rectangular, and the radical formulas only real-branched, for beta > 1.
    """
    beta = float(beta)
    if not math.isfinite(beta) or not beta > 1.0:
        raise ValueError(f"beta must be a finite number > 1 (got {beta!r})")
    inv = 1.0 / beta
    alpha = (beta + inv) / 3.0
    d = beta - inv
    delta = (beta / d) ** 0.5
    e1 = alpha
    e2 = alpha - inv
    e3 = alpha - beta
    g2 = -4.0 * (e1 * e2 + e1 * e3 + e2 * e3)
    g3 = 4.0 * e1 * e2 * e3
    # discriminant of the monic cubic x(x+beta)(x+1/beta) is d^2
    return CurveParams(beta, alpha, d, delta, e1, e2, e3, g2, g3, d)
