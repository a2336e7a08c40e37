"""Cross-checks: closed forms vs the Laurent evaluator vs a half-argument
(bisection) oracle, plus the geometric claims, in one machine-readable report.

The half-argument oracle rebuilds every eighth-period value from the exact
half-period seeds (0, -beta, -1/beta, pole) using only the bisection identity

    R(z/2) = R(z) + s1*sqrt(R(R+1/b)) + s2*sqrt((R+1/b)(R+b)) + s3*sqrt((R+b)R)

with sign triples constrained to s1*s2*s3 = +1, and half-period translation
identities R(z+omega1) = 1/R(z), R(z+omega2) = -beta + beta*d/(R(z)+beta).
The fast evaluator only supplies a deliberately coarse probe (3 decimals) to
pick among the four discrete branch candidates; it never contributes digits.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

from .evaluate import POLE, NodeValue, essential_R, is_pole, log_deriv_sq
from .lattice import Lattice, compute_lattice
from .params import CurveParams, derive_params
from .radicals import ClosedFormTable, grid_table

TRIPLE_TOL = 1e-8     # pairwise source agreement
AXES_TOL = 1e-9       # oracle vs closed forms on the grid axes
CONJ_TOL = 1e-10      # conjugate-node consistency
INVERSION_TOL = 1e-6  # circle-inversion line mapping


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class NodeCheck:
    m: int
    n: int
    symbol: str
    closed: NodeValue
    numeric: NodeValue
    abs_err: float
    rel_err: float


@dataclass(frozen=True)
class VerificationReport:
    beta: float
    tol: float
    orientation_flipped: bool
    per_node: tuple
    property_results: tuple
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "beta": self.beta,
            "tol": self.tol,
            "orientation_flipped": self.orientation_flipped,
            "verdict": self.verdict,
            "per_node": [
                {
                    "m": c.m,
                    "n": c.n,
                    "symbol": c.symbol,
                    "closed": _nv_json(c.closed),
                    "numeric": _nv_json(c.numeric),
                    "abs_err": _finite_or_none(c.abs_err),
                    "rel_err": _finite_or_none(c.rel_err),
                }
                for c in self.per_node
            ],
            "property_results": [
                {"name": p.name, "pass": p.passed, "detail": p.detail}
                for p in self.property_results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _nv_json(v):
    if v is None:
        return "inconclusive"
    if is_pole(v):
        return "pole"
    return {"re": v.real, "im": v.imag}


def _finite_or_none(x: float):
    return x if math.isfinite(x) else None


def _node_z(lat: Lattice, m: int, n: int) -> complex:
    return complex(m * lat.omega1 / 4.0, n * lat.omega2_im / 4.0)


def _scaled_err(closed: complex, other: complex) -> float:
    return abs(closed - other) / max(1.0, abs(closed))


# ---------------------------------------------------------------------------
# half-argument oracle

_SIGN_TRIPLES = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))

# The probe components are rounded to 1e-3, so the probe can sit up to
# 5e-4 per component (~7.08e-4 in modulus) away from the value it labels.
# Any candidate inside this radius is a legitimate match for the probe;
# two distinct ones inside it means the probe cannot certify a winner.
_PROBE_COMPAT = 7.5e-4


def _halve_branch(v: complex, probe: complex, beta: float):
    """Pick R(z/2) among the four sign-triple candidates using the probe.

    The three radical terms must come from one consistent choice of the
    individual roots sqrt(R), sqrt(R+1/b), sqrt(R+b): then their product is
    exactly R(R+1/b)(R+b) = (R'/2)^2 and the sign triples multiplying to +1
    enumerate the four half-points. Taking principal roots of the pairwise
    products instead breaks the constraint wherever that cubic leaves the
    positive real axis.
    """
    q1 = cmath.sqrt(v)
    q2 = cmath.sqrt(v + 1.0 / beta)
    q3 = cmath.sqrt(v + beta)
    r1 = q1 * q2
    r2 = q2 * q3
    r3 = q3 * q1
    cands = [v + s1 * r1 + s2 * r2 + s3 * r3 for (s1, s2, s3) in _SIGN_TRIPLES]
    dists = [abs(c - probe) for c in cands]
    best = min(range(4), key=dists.__getitem__)
    scale = max(1.0, abs(probe))
    for i in range(4):
        if i == best or abs(cands[i] - cands[best]) <= 1e-8 * scale:
            continue  # coincident branch (vanishing radicand): not ambiguous
        if dists[i] <= _PROBE_COMPAT:
            return None  # a second candidate is probe-compatible: ambiguous
    if dists[best] > 0.05 * scale:
        return None  # probe matches no candidate; do not guess
    return cands[best]


def half_argument_oracle(params: CurveParams, lat: Lattice):
    """9x9 array (indexed [m][n]) of independently derived node values.

    None marks a node whose branch selection was inconclusive.
    """
    beta = params.beta
    d = params.d

    def shift_m(v):  # R(z + omega1) = 1/R(z)
        if v is None:
            return None
        if is_pole(v):
            return 0j
        if v == 0:
            return POLE
        return 1.0 / v

    def shift_n(v):  # R(z + omega2) = -beta + beta*d/(R(z) + beta)
        if v is None:
            return None
        if is_pole(v):
            return complex(-beta)
        den = v + beta
        if den == 0:
            return POLE
        return -beta + beta * d / den

    def probe(m, n):
        r = essential_R(_node_z(lat, m, n), lat, params)
        return complex(round(r.real, 3), round(r.imag, 3))

    def halve(src, m, n):
        if src is None:
            return None
        return _halve_branch(src, probe(m, n), beta)

    T = [[None] * 9 for _ in range(9)]
    done = [[False] * 9 for _ in range(9)]

    def put(m, n, v):
        T[m][n] = v
        done[m][n] = True

    # exact half-period seeds
    for m, n in ((0, 0), (8, 0), (0, 8), (8, 8)):
        put(m, n, POLE)
    put(4, 0, 0j)
    put(0, 4, complex(-beta))
    put(4, 4, complex(-1.0 / beta))
    # quarter-period nodes by one bisection
    put(2, 0, halve(T[4][0], 2, 0))
    put(0, 2, halve(T[0][4], 0, 2))
    put(2, 2, halve(T[4][4], 2, 2))
    put(4, 2, shift_m(T[0][2]))
    put(2, 4, shift_n(T[2][0]))
    # remaining even nodes by translation
    for n in (0, 2, 4):
        for m in (6, 8):
            if not done[m][n]:
                put(m, n, shift_m(T[m - 4][n]))
    for m in (0, 2, 4, 6, 8):
        for n in (6, 8):
            if not done[m][n]:
                put(m, n, shift_n(T[m][n - 4]))
    # eighth-period nodes in the base block by a second bisection
    for m in range(5):
        for n in range(5):
            if not done[m][n]:
                put(m, n, halve(T[2 * m][2 * n], m, n))
    # translate the rest
    for n in range(5):
        for m in (5, 6, 7, 8):
            if not done[m][n]:
                put(m, n, shift_m(T[m - 4][n]))
    for m in range(9):
        for n in (5, 6, 7, 8):
            if not done[m][n]:
                put(m, n, shift_n(T[m][n - 4]))
    return T


# ---------------------------------------------------------------------------
# claims

def verify_claims(beta: float) -> list[PropertyResult]:
    """The geometric/figure claims for one beta, as property results."""
    params = derive_params(beta)
    lat = compute_lattice(params)
    table = grid_table(params)
    beta = params.beta
    d = params.d
    radius = beta / params.delta
    results = []

    # (a) (R'/R)^2 = 4d at the four half-rectangle centers
    centers = {}
    worst = 0.0
    for m, n in ((2, 2), (6, 2), (2, 6), (6, 6)):
        q = log_deriv_sq(_node_z(lat, m, n), lat, params)
        err = abs(q - 4.0 * d) / (4.0 * d)
        centers[(m, n)] = err
        worst = max(worst, err)
    results.append(
        PropertyResult(
            "log_deriv_sq_at_centers",
            worst <= 1e-9,
            "all four centers give 4d; max rel err "
            + "; ".join(f"({m},{n}): {e:.3e}" for (m, n), e in centers.items()),
        )
    )

    # (b) the center value lies on both circles
    v = essential_R(_node_z(lat, 2, 2), lat, params)
    e_unit = abs(abs(v) - 1.0)
    e_red = abs(abs(v + beta) - radius) / max(1.0, radius)
    pairing = "(omega1+omega2)/2 -> " + (
        "-conj(gamma)/beta" if v.imag < 0 else "-gamma/beta"
    )
    results.append(
        PropertyResult(
            "center_on_both_circles",
            e_unit <= 1e-10 and e_red <= 1e-10,
            f"| |v|-1 | = {e_unit:.3e}, | |v+beta|-beta/delta | = {e_red:.3e}; {pairing}",
        )
    )

    # (c) circle orthogonality identity
    e_orth = abs(radius * radius + 1.0 - beta * beta) / (beta * beta)
    results.append(
        PropertyResult(
            "circle_orthogonality",
            e_orth <= 1e-12,
            f"(beta/delta)^2 + 1 = beta^2 rel err {e_orth:.3e}",
        )
    )

    # (d) +-1 occur exactly at the order-4 nodes
    plus = set()
    minus = set()
    for m, n, _sym, val in table:
        if is_pole(val):
            continue
        if abs(val - 1.0) <= 1e-9:
            plus.add((m, n))
        if abs(val + 1.0) <= 1e-9:
            minus.add((m, n))
    ok_d = plus == {(2, 0), (6, 0), (2, 8), (6, 8)} and minus == {(2, 4), (6, 4)}
    results.append(
        PropertyResult(
            "order4_values_pm1",
            ok_d,
            f"+1 at {sorted(plus)}, -1 at {sorted(minus)}",
        )
    )

    # (e) (R'/R)^2(center) / d = 4 (discriminant_sqrt link: disc = d^2)
    q = log_deriv_sq(_node_z(lat, 2, 2), lat, params)
    ratio = q / params.discriminant_sqrt
    e_ratio = abs(ratio - 4.0) / 4.0
    results.append(
        PropertyResult(
            "log_deriv_sq_over_d_is_4",
            e_ratio <= 1e-9,
            f"ratio rel err {e_ratio:.3e}",
        )
    )
    return results


# ---------------------------------------------------------------------------
# grid verification

def _detect_flip(table: ClosedFormTable, numeric, tol: float) -> bool:
    """True when row n=1 matches the conjugate of the transcribed row instead
    (i.e. the figure's rows run against +omega2); applied as a single global
    n -> 8-n reindex, implemented by conjugating the numeric values."""
    direct_all = True
    conj_all = True
    for m in (1, 3, 5, 7):
        closed = table.value(m, 1)
        num = numeric[m][1]
        if is_pole(closed) or is_pole(num):
            continue
        scale = max(1.0, abs(closed))
        if abs(num - closed) > tol * scale:
            direct_all = False
        if abs(num - closed.conjugate()) > tol * scale:
            conj_all = False
    return conj_all and not direct_all


def _line_inversion_checks(params: CurveParams, lat: Lattice) -> list[PropertyResult]:
    """Circle inversion maps each family of mapped coordinate lines onto the
    symmetric member of the same family; spot-check pointwise."""
    beta = params.beta
    d = params.d
    w1, w2i = lat.omega1, lat.omega2_im
    results = []

    worst_red = 0.0
    for k in (2, 4, 6):
        c = k * w2i / 8.0
        for j in range(17):
            t = (j + 0.3) * 2.0 * w1 / 17.0
            v = essential_R(complex(t, c), lat, params)
            # inversion about the circle centered -beta, radius beta/delta
            inv = -beta + beta * d / (v + beta).conjugate()
            tgt = essential_R(complex(t, w2i - c), lat, params)
            worst_red = max(worst_red, abs(inv - tgt) / max(1.0, abs(tgt)))
    results.append(
        PropertyResult(
            "red_circle_inverts_red_lines",
            worst_red <= INVERSION_TOL,
            f"lines k=2,4,6 vs k=14,12,10 (same parameter), max rel err {worst_red:.3e}",
        )
    )

    worst_blue = 0.0
    for k in (2, 4, 6):
        a = k * w1 / 8.0
        for j in range(17):
            s = (j + 0.3) * 2.0 * w2i / 17.0
            v = essential_R(complex(a, s), lat, params)
            inv = 1.0 / v.conjugate()  # unit-circle inversion
            tgt = essential_R(complex(a + w1, -s), lat, params)
            worst_blue = max(worst_blue, abs(inv - tgt) / max(1.0, abs(tgt)))
    results.append(
        PropertyResult(
            "blue_circle_inverts_blue_lines",
            worst_blue <= INVERSION_TOL,
            f"lines k=2,4,6 vs k=10,12,14 (reflected parameter), max rel err {worst_blue:.3e}",
        )
    )
    return results


def verify_grid(beta: float, tol: float = 1e-9) -> VerificationReport:
    """Verify all 81 grid nodes and the named identity properties for one beta."""
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    params = derive_params(beta)
    lat = compute_lattice(params)
    table = grid_table(params)

    numeric = [
        [essential_R(_node_z(lat, m, n), lat, params) for n in range(9)]
        for m in range(9)
    ]
    flipped = _detect_flip(table, numeric, tol)
    oracle = half_argument_oracle(params, lat)
    if flipped:
        conj = lambda v: v if (v is None or is_pole(v)) else v.conjugate()
        numeric = [[conj(v) for v in col] for col in numeric]
        oracle = [[conj(v) for v in col] for col in oracle]

    per_node = []
    nodes_pass = True
    for n in range(9):
        for m in range(9):
            closed = table.value(m, n)
            num = numeric[m][n]
            if is_pole(closed) and is_pole(num):
                abs_err = rel_err = 0.0
            elif is_pole(closed) or is_pole(num):
                abs_err = rel_err = math.inf
            else:
                abs_err = abs(closed - num)
                rel_err = abs_err / max(1.0, abs(closed))
            if not rel_err <= tol:
                nodes_pass = False
            per_node.append(
                NodeCheck(m, n, table.symbol(m, n), closed, num, abs_err, rel_err)
            )

    props = verify_claims(params.beta)

    # triple-source pairwise agreement on every node
    worst_pair = 0.0
    bad = []
    inconclusive = []
    for n in range(9):
        for m in range(9):
            closed, num, orc = table.value(m, n), numeric[m][n], oracle[m][n]
            if orc is None:
                inconclusive.append((m, n))
                continue
            kinds = {is_pole(closed), is_pole(num), is_pole(orc)}
            if kinds == {True}:
                continue
            if len(kinds) == 2:
                bad.append((m, n))
                continue
            e = max(
                _scaled_err(closed, num),
                _scaled_err(closed, orc),
                _scaled_err(num, orc),
            )
            worst_pair = max(worst_pair, e)
    triple_ok = not bad and not inconclusive and worst_pair <= TRIPLE_TOL
    detail = f"max pairwise scaled err {worst_pair:.3e}"
    if inconclusive:
        detail += f"; inconclusive oracle nodes {inconclusive}"
    if bad:
        detail += f"; pole/finite disagreement at {bad}"
    props.append(PropertyResult("triple_source_agreement", triple_ok, detail))

    # oracle vs closed forms on the two axes
    worst_axes = 0.0
    for m in range(9):
        for pos in ((m, 0), (0, m)):
            closed, orc = table.value(*pos), oracle[pos[0]][pos[1]]
            if orc is None or is_pole(closed) or is_pole(orc):
                continue
            worst_axes = max(worst_axes, _scaled_err(closed, orc))
    props.append(
        PropertyResult(
            "oracle_matches_closed_on_axes",
            worst_axes <= AXES_TOL,
            f"max scaled err {worst_axes:.3e}",
        )
    )

    # Schwarz reflection between mirror rows
    worst_conj = 0.0
    for n in range(9):
        for m in range(9):
            a, b = numeric[m][n], numeric[m][8 - n]
            if is_pole(a) or is_pole(b):
                continue
            worst_conj = max(
                worst_conj, abs(a - b.conjugate()) / max(1.0, abs(a))
            )
    props.append(
        PropertyResult(
            "conjugate_node_consistency",
            worst_conj <= CONJ_TOL,
            f"max scaled err {worst_conj:.3e}",
        )
    )

    props.extend(_line_inversion_checks(params, lat))

    verdict = "pass" if nodes_pass and all(p.passed for p in props) else "fail"
    return VerificationReport(
        beta=params.beta,
        tol=tol,
        orientation_flipped=flipped,
        per_node=tuple(per_node),
        property_results=tuple(props),
        verdict=verdict,
    )


def sweep(beta_min: float, beta_max: float, steps: int, tol: float = 1e-9):
    """verify_grid over an inclusive linspace of beta values."""
    steps = int(steps)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if not beta_min > 1.0 or not beta_max >= beta_min:
        raise ValueError("need 1 < beta_min <= beta_max")
    if steps == 1:
        betas = [beta_min]
    else:
        last = steps - 1
        betas = [
            beta_max if i == last else beta_min + (beta_max - beta_min) * i / last
            for i in range(steps)
        ]
    return [(b, verify_grid(b, tol)) for b in betas]
