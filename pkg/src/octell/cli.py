"""Command line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or domain error (bad beta, malformed complex literal, pole input).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from ._backend import BACKEND
from .evaluate import (
    essential_R,
    is_pole,
    log_deriv_sq,
    wp,
    wp_prime,
)
from .figure import GOLDEN_BETA, FigureConfig, render_figure
from .lattice import compute_lattice
from .params import derive_params
from .radicals import grid_table
from .verify import sweep, verify_grid

# decimal literals only: "1.5", "-2", "0.5+1.25i", "3-0.5i", "2i", "-i", "i"
_COMPLEX_RE = re.compile(
    r"""^\s*
    (?:
        (?P<re>[+-]?(?:\d+\.?\d*|\.\d+))
        (?:(?P<im1>[+-](?:\d+\.?\d*|\.\d+)?)i)?
        |
        (?P<im2>[+-]?(?:\d+\.?\d*|\.\d+)?)i
    )
    \s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse 'a', 'bi', or 'a+bi' with plain decimal parts (no exponents)."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ValueError(f"not a complex literal: {text!r}")
    re_part = float(m.group("re") or 0.0)
    im_text = m.group("im1") if m.group("im1") is not None else m.group("im2")
    if im_text is None:
        im_part = 0.0
    elif im_text in ("", "+"):
        im_part = 1.0
    elif im_text == "-":
        im_part = -1.0
    else:
        im_part = float(im_text)
    return complex(re_part, im_part)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _cv_json(v):
    if is_pole(v):
        return "pole"
    return {"re": v.real, "im": v.imag}


def _cmd_params(args) -> int:
    params = derive_params(args.beta)
    lat = compute_lattice(params)
    obj = {
        "schema": 1,
        "beta": params.beta,
        "alpha": params.alpha,
        "d": params.d,
        "delta": params.delta,
        "e1": params.e1,
        "e2": params.e2,
        "e3": params.e3,
        "g2": params.g2,
        "g3": params.g3,
        "discriminant_sqrt": params.discriminant_sqrt,
        "omega1": lat.omega1,
        "omega2_im": lat.omega2_im,
        "backend": BACKEND,
    }
    _emit_json(obj, args.out)
    return 0


def _cmd_grid(args) -> int:
    params = derive_params(args.beta)
    table = grid_table(params)
    if args.format == "csv":
        lines = ["m,n,symbol,re,im"]
        for m, n, sym, val in table:
            if is_pole(val):
                lines.append(f"{m},{n},{sym},,")
            else:
                lines.append(f"{m},{n},{sym},{val.real!r},{val.imag!r}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    entries = []
    for m, n, sym, val in table:
        if is_pole(val):
            entries.append({"m": m, "n": n, "symbol": sym, "value": "pole"})
        else:
            entries.append(
                {"m": m, "n": n, "symbol": sym, "re": val.real, "im": val.imag}
            )
    _emit_json({"schema": 1, "beta": params.beta, "entries": entries}, args.out)
    return 0


def _cmd_eval(args) -> int:
    params = derive_params(args.beta)
    lat = compute_lattice(params)
    z = parse_complex(args.z)
    if args.what == "log_deriv_sq":
        value = log_deriv_sq(z, lat, params)
    elif args.what == "wp":
        value = wp(z, lat, params)
    elif args.what == "wp_prime":
        value = wp_prime(z, lat, params)
    else:
        value = essential_R(z, lat, params)
    obj = {
        "schema": 1,
        "beta": params.beta,
        "z": {"re": z.real, "im": z.imag},
        "what": args.what,
        "value": _cv_json(value),
    }
    _emit_json(obj, args.out)
    return 0


def _cmd_verify(args) -> int:
    report = verify_grid(args.beta, tol=args.tol)
    _emit(report.to_json() + "\n", args.out)
    return 0 if report.passed else 1


def _cmd_sweep(args) -> int:
    results = sweep(args.beta_min, args.beta_max, args.steps, tol=args.tol)
    rows = [
        {
            "beta": b,
            "verdict": rep.verdict,
            "orientation_flipped": rep.orientation_flipped,
        }
        for b, rep in results
    ]
    all_pass = all(rep.passed for _, rep in results)
    _emit_json({"schema": 1, "results": rows, "all_pass": all_pass}, args.out)
    return 0 if all_pass else 1


def _cmd_figure(args) -> int:
    viewport = None
    if args.viewport:
        viewport = tuple(args.viewport)
    config = FigureConfig(
        beta=args.beta,
        lines_per_axis=args.lines,
        samples_per_line=args.samples,
        viewport=viewport,
        clip_radius=args.clip_radius,
    )
    _emit(render_figure(config), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octell",
        description="Shifted Weierstrass grid values, verification and figures.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_beta(p):
        p.add_argument(
            "--beta",
            type=float,
            default=GOLDEN_BETA,
            help="curve parameter, must be > 1 (default: (3+sqrt(5))/2)",
        )

    def add_out(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("params", help="derived curve and lattice constants")
    add_beta(p)
    add_out(p)
    p.set_defaults(fn=_cmd_params)

    p = sub.add_parser("grid", help="closed-form 9x9 node table")
    add_beta(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_out(p)
    p.set_defaults(fn=_cmd_grid)

    p = sub.add_parser("eval", help="evaluate at one point")
    add_beta(p)
    p.add_argument("--z", required=True, help="complex point, e.g. '0.7+0.3i'")
    p.add_argument(
        "--what",
        choices=("R", "wp", "wp_prime", "log_deriv_sq"),
        default="R",
    )
    add_out(p)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("verify", help="closed forms vs numerics, full report")
    add_beta(p)
    p.add_argument("--tol", type=float, default=1e-9)
    add_out(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("sweep", help="verify over a range of beta")
    p.add_argument("--beta-min", type=float, required=True)
    p.add_argument("--beta-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=9)
    p.add_argument("--tol", type=float, default=1e-9)
    add_out(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("figure", help="render the conformal grid image as SVG")
    add_beta(p)
    p.add_argument("--lines", type=int, default=16)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument(
        "--viewport",
        type=float,
        nargs=4,
        metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
    )
    p.add_argument("--clip-radius", type=float)
    add_out(p)
    p.set_defaults(fn=_cmd_figure)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"octell: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
