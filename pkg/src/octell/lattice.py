"""Period lattice of the curve, rectangular for beta > 1.

Half-periods come from the classical AGM reduction of the complete elliptic
integrals over the root gaps e1-e3 = beta, e1-e2 = 1/beta, e2-e3 = d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .params import CurveParams


@dataclass(frozen=True)
class Lattice:
    omega1: float      # real half-period, > 0
    omega2_im: float   # imaginary part of the purely imaginary half-period

    @property
    def omega2(self) -> complex:
        return complex(0.0, self.omega2_im)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean; a, b must be positive and finite."""
    a = float(a)
    b = float(b)
    if not (a > 0.0 and b > 0.0) or not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"agm needs positive finite inputs, got ({a!r}, {b!r})")
    return _backend.agm(a, b)


def compute_lattice(params: CurveParams) -> Lattice:
    beta = params.beta
    sb = math.sqrt(beta)
    w1 = math.pi / (2.0 * agm(sb, 1.0 / sb))
    w2i = math.pi / (2.0 * agm(sb, math.sqrt(params.d)))
    return Lattice(w1, w2i)
