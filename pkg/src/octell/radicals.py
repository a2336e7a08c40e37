"""Radical closed forms: the constant catalog and the 81-entry grid table.

Every value R takes at an eighth-period node (m*omega1 + n*omega2)/4,
m, n in 0..8, has a nested-radical closed form built from a small catalog of
constants. The four "order-8" values gamma41..gamma44 carry a sgn(beta - b)
factor, b the tribonacci constant, that keeps them continuous across the
double root of their inner radicand.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

from .evaluate import POLE, NodeValue
from .params import BETA_FLOOR, CurveParams

_SQRT2 = math.sqrt(2.0)

_cbrt = getattr(math, "cbrt", lambda v: v ** (1.0 / 3.0))


def tribonacci_b() -> float:
    """Real root of x^3 - x^2 - x - 1 (closed cube-root form)."""
    s = 3.0 * math.sqrt(33.0)
    return (1.0 + _cbrt(19.0 - s) + _cbrt(19.0 + s)) / 3.0


_B = tribonacci_b()


def ascending_sequence(x: float) -> tuple[float, float, float, float]:
    """(1-sqrt(x+1), 1-sqrt(1+1/x), 1+sqrt(1+1/x), 1+sqrt(x+1)), ascending for x > 1."""
    x = float(x)
    if not x > 1.0:
        raise ValueError(f"ascending_sequence needs x > 1, got {x!r}")
    lo = math.sqrt(1.0 + 1.0 / x)
    hi = math.sqrt(x + 1.0)
    return (1.0 - hi, 1.0 - lo, 1.0 + lo, 1.0 + hi)


@dataclass(frozen=True)
class RadicalCatalog:
    gamma_minus_r: float            # 1 - 1/delta
    gamma_plus_r: float             # 1 + 1/delta
    gamma: complex                  # 1 - i*beta/delta, modulus beta
    beta_seq: tuple[float, float, float, float]
    delta_seq: tuple[float, float, float, float]
    gamma02: float
    gamma13: float
    gamma01: float
    gamma23: float
    beta_pm: tuple[float, float]    # 1 -+ sqrt(1 - 1/beta)
    delta_pm: tuple[float, float]   # 1 -+ (sqrt(1+1/beta) - sqrt(1-1/beta))/sqrt(2)
    gamma0: complex                 # 1 - i*sqrt(beta-1)
    gamma_lo: complex               # 1 - delta_minus*(1 + i*sqrt(delta-1))/delta
    gamma_hi: complex               # 1 - delta_plus *(1 + i*sqrt(delta-1))/delta
    gamma41: complex
    gamma42: complex
    gamma43: complex
    gamma44: complex
    b_const: float


def _warn_floor(beta: float) -> None:
    if beta < BETA_FLOOR:
        warnings.warn(
            f"beta = {beta} is within 1e-6 of 1; 1/sqrt(beta-1) radicals "
            "lose significant digits",
            RuntimeWarning,
            stacklevel=3,
        )


def branch_radicand(beta: float) -> float:
    """Inner radicand of gamma43/gamma44: beta/sqrt(beta-1) - 1/sqrt(beta+1) - sqrt(2).

    Nonnegative for beta > 1, with a double root at the tribonacci constant;
    returned unclamped so callers can see the tiny negative rounding dips
    right at the root.
    """
    beta = float(beta)
    if not beta > 1.0:
        raise ValueError(f"branch_radicand needs beta > 1, got {beta!r}")
    return beta / math.sqrt(beta - 1.0) - 1.0 / math.sqrt(beta + 1.0) - _SQRT2


def _gamma4_shared(beta: float) -> dict:
    """Radicals shared by the four gamma4 formulas, computed once."""
    sb1 = math.sqrt(beta + 1.0)
    core = beta / math.sqrt(beta - 1.0)
    inv_sb1 = 1.0 / sb1
    f_neg = branch_radicand(beta)   # double root at beta = b
    if f_neg < 0.0:
        if f_neg < -1e-12:
            raise ValueError(
                f"gamma4 radicand unexpectedly negative ({f_neg}) at beta={beta}"
            )
        f_neg = 0.0
    return {
        "x": 1.0 - 1.0 / beta,
        "y": math.sqrt(1.0 - 1.0 / (beta * beta)),
        "half": math.sqrt((beta + 1.0) / 2.0),
        "q_pos": sb1 * math.sqrt(sb1 + _SQRT2) / beta,
        "q_neg": sb1 * math.sqrt(sb1 - _SQRT2) / beta,
        "a_pos": math.sqrt(core - inv_sb1 + _SQRT2),
        "b_pos": math.sqrt(core + inv_sb1 - _SQRT2),
        "a_neg": math.sqrt(f_neg),
        "b_neg": math.sqrt(core + inv_sb1 + _SQRT2),
        "sgn": 1.0 if beta >= _B else -1.0,
    }


def gamma4(params: CurveParams, which: int) -> complex:
    """One of the four order-8 closed forms (which in {41, 42, 43, 44})."""
    beta = params.beta
    _warn_floor(beta)
    s = _gamma4_shared(beta)
    x, y = s["x"], s["y"]
    if which == 41:
        return (1.0 - s["half"]) * complex(
            x + s["q_pos"] * s["a_pos"], -y - s["q_pos"] * s["b_pos"]
        ) - 1.0
    if which == 42:
        return (1.0 - s["half"]) * complex(
            x - s["q_pos"] * s["a_pos"], y - s["q_pos"] * s["b_pos"]
        ) - 1.0
    if which == 43:
        return (s["half"] + 1.0) * complex(
            x - s["q_neg"] * s["sgn"] * s["a_neg"], -y + s["q_neg"] * s["b_neg"]
        ) - 1.0
    if which == 44:
        return (s["half"] + 1.0) * complex(
            x + s["q_neg"] * s["sgn"] * s["a_neg"], y + s["q_neg"] * s["b_neg"]
        ) - 1.0
    raise ValueError(f"which must be one of 41, 42, 43, 44 (got {which!r})")


def build_catalog(params: CurveParams) -> RadicalCatalog:
    beta = params.beta
    delta = params.delta
    _warn_floor(beta)
    d0, d1, d2, d3 = delta_seq = ascending_sequence(delta)
    sp = math.sqrt(1.0 + 1.0 / beta)
    sm = math.sqrt(1.0 - 1.0 / beta)
    dpm_off = (sp - sm) / _SQRT2
    delta_pm = (1.0 - dpm_off, 1.0 + dpm_off)
    g0_im = math.sqrt(beta - 1.0)
    tilt = complex(1.0, math.sqrt(delta - 1.0))  # 1 + i*sqrt(delta-1)
    return RadicalCatalog(
        gamma_minus_r=1.0 - 1.0 / delta,
        gamma_plus_r=1.0 + 1.0 / delta,
        gamma=complex(1.0, -beta / delta),
        beta_seq=ascending_sequence(beta),
        delta_seq=delta_seq,
        gamma02=1.0 + d0 * d2 / delta,
        gamma13=1.0 + d1 * d3 / delta,
        gamma01=1.0 + d0 * d1 / delta,
        gamma23=1.0 + d2 * d3 / delta,
        beta_pm=(1.0 - sm, 1.0 + sm),
        delta_pm=delta_pm,
        gamma0=complex(1.0, -g0_im),
        gamma_lo=1.0 - delta_pm[0] * tilt / delta,
        gamma_hi=1.0 - delta_pm[1] * tilt / delta,
        gamma41=gamma4(params, 41),
        gamma42=gamma4(params, 42),
        gamma43=gamma4(params, 43),
        gamma44=gamma4(params, 44),
        b_const=_B,
    )


# conjugation map for the complex-valued entry symbols; real symbols map to
# themselves
_CONJ_SYMBOL = {}
for _name in (
    "gamma_hi", "gamma_lo", "gamma0", "gamma41", "gamma42", "gamma43", "gamma44",
):
    _CONJ_SYMBOL[_name] = f"conj({_name})"
for _sym, _csym in [
    ("-beta*gamma_hi", "-beta*conj(gamma_hi)"),
    ("-beta*gamma_lo", "-beta*conj(gamma_lo)"),
    ("-gamma/beta", "-conj(gamma)/beta"),
    ("-beta_plus*gamma0", "-beta_plus*conj(gamma0)"),
    ("-beta_minus*gamma0", "-beta_minus*conj(gamma0)"),
    ("gamma41", "conj(gamma41)"),
    ("gamma42", "conj(gamma42)"),
    ("gamma43", "conj(gamma43)"),
    ("gamma44", "conj(gamma44)"),
]:
    _CONJ_SYMBOL[_sym] = _csym
    _CONJ_SYMBOL[_csym] = _sym


def _conj_symbol(sym: str) -> str:
    return _CONJ_SYMBOL.get(sym, sym)


@dataclass(frozen=True)
class ClosedFormTable:
    """81 grid entries; index (m, n) = column, row; POLE at the four corners."""

    beta: float
    _values: tuple   # rows n = 0..8, each a 9-tuple over m
    _symbols: tuple

    def value(self, m: int, n: int) -> NodeValue:
        return self._values[n][m]

    def symbol(self, m: int, n: int) -> str:
        return self._symbols[n][m]

    def __iter__(self) -> Iterator[tuple[int, int, str, NodeValue]]:
        for n in range(9):
            for m in range(9):
                yield m, n, self._symbols[n][m], self._values[n][m]


def grid_table(params: CurveParams) -> ClosedFormTable:
    """The full table of closed-form values at the eighth-period nodes."""
    c = build_catalog(params)
    beta = params.beta
    b0, b1, b2, b3 = c.beta_seq
    bm, bp = c.beta_pm
    g0c = c.gamma0.conjugate()
    rows = [
        [
            (POLE, "inf"),
            (complex(b2 * b3), "beta2*beta3"),
            (complex(1.0), "1"),
            (complex(b0 * b1), "beta0*beta1"),
            (complex(0.0), "0"),
            (complex(b0 * b1), "beta0*beta1"),
            (complex(1.0), "1"),
            (complex(b2 * b3), "beta2*beta3"),
            (POLE, "inf"),
        ],
        [
            (complex(-beta * c.gamma23), "-beta*gamma23"),
            (c.gamma44.conjugate(), "conj(gamma44)"),
            (-beta * c.gamma_hi.conjugate(), "-beta*conj(gamma_hi)"),
            (c.gamma43.conjugate(), "conj(gamma43)"),
            (complex(-beta * c.gamma02), "-beta*gamma02"),
            (c.gamma43, "gamma43"),
            (-beta * c.gamma_hi, "-beta*gamma_hi"),
            (c.gamma44, "gamma44"),
            (complex(-beta * c.gamma23), "-beta*gamma23"),
        ],
        [
            (complex(-beta * c.gamma_plus_r), "-beta*gamma_plus_r"),
            (-bp * g0c, "-beta_plus*conj(gamma0)"),
            (-c.gamma.conjugate() / beta, "-conj(gamma)/beta"),
            (-bm * g0c, "-beta_minus*conj(gamma0)"),
            (complex(-beta * c.gamma_minus_r), "-beta*gamma_minus_r"),
            (-bm * c.gamma0, "-beta_minus*gamma0"),
            (-c.gamma / beta, "-gamma/beta"),
            (-bp * c.gamma0, "-beta_plus*gamma0"),
            (complex(-beta * c.gamma_plus_r), "-beta*gamma_plus_r"),
        ],
        [
            (complex(-beta * c.gamma01), "-beta*gamma01"),
            (c.gamma41.conjugate(), "conj(gamma41)"),
            (-beta * c.gamma_lo.conjugate(), "-beta*conj(gamma_lo)"),
            (c.gamma42.conjugate(), "conj(gamma42)"),
            (complex(-beta * c.gamma13), "-beta*gamma13"),
            (c.gamma42, "gamma42"),
            (-beta * c.gamma_lo, "-beta*gamma_lo"),
            (c.gamma41, "gamma41"),
            (complex(-beta * c.gamma01), "-beta*gamma01"),
        ],
        [
            (complex(-beta), "-beta"),
            (complex(b0 * b2), "beta0*beta2"),
            (complex(-1.0), "-1"),
            (complex(b1 * b3), "beta1*beta3"),
            (complex(-1.0 / beta), "-1/beta"),
            (complex(b1 * b3), "beta1*beta3"),
            (complex(-1.0), "-1"),
            (complex(b0 * b2), "beta0*beta2"),
            (complex(-beta), "-beta"),
        ],
    ]
    for n in (5, 6, 7, 8):
        rows.append(
            [
                (v if v is POLE else v.conjugate(), _conj_symbol(sym))
                for (v, sym) in rows[8 - n]
            ]
        )
    values = tuple(tuple(v for v, _ in row) for row in rows)
    symbols = tuple(tuple(s for _, s in row) for row in rows)
    return ClosedFormTable(beta=beta, _values=values, _symbols=symbols)
