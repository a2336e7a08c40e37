#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension, if present.

Run from a checkout after `pip install -e .`:

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --repeat 5 --points 4000
"""
from __future__ import annotations

import argparse
import math
import time


def load_backends():
    from octell import _pycore

    backends = [("pure", _pycore)]
    try:
        from octell import _core
    except ImportError:
        print("compiled extension not importable; timing pure python only\n")
    else:
        backends.append(("compiled", _core))
    return backends


def sample_points(w1: float, w2i: float, count: int):
    # deterministic scatter over the period cell, away from the lattice
    pts = []
    for i in range(count):
        fx = (i * 0.6180339887498949 + 0.083) % 1.0
        fy = (i * 0.7548776662466927 + 0.127) % 1.0
        pts.append(complex((0.06 + 0.88 * fx) * 2.0 * w1, (0.06 + 0.88 * fy) * 2.0 * w2i))
    return pts


def best_of(repeat: int, fn):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--points", type=int, default=2000)
    ap.add_argument("--beta", type=float, default=(3.0 + math.sqrt(5.0)) / 2.0)
    args = ap.parse_args()

    from octell import compute_lattice, derive_params

    params = derive_params(args.beta)
    lat = compute_lattice(params)
    w1, w2i, g2, g3 = lat.omega1, lat.omega2_im, params.g2, params.g3
    pts = sample_points(w1, w2i, args.points)
    zsum = complex(0.37 * w1, 0.41 * w2i)

    backends = load_backends()
    rows = []
    for name, mod in backends:
        t_agm = best_of(args.repeat, lambda m=mod: [m.agm(math.sqrt(args.beta), 1.0 / math.sqrt(args.beta)) for _ in range(20000)])
        t_wp = best_of(args.repeat, lambda m=mod: [m.wp_pair(z, w1, w2i, g2, g3) for z in pts])
        t_sum = best_of(args.repeat, lambda m=mod: m.lattice_sum(zsum, w1, w2i, 80))
        rows.append((name, t_agm, t_wp, t_sum))

    print(f"beta = {args.beta}, {args.points} wp points, best of {args.repeat}")
    print(f"{'backend':<10} {'agm x20k':>12} {'wp_pair':>12} {'lattice_sum(80)':>16}")
    for name, t_agm, t_wp, t_sum in rows:
        print(f"{name:<10} {t_agm:>11.4f}s {t_wp:>11.4f}s {t_sum:>15.4f}s")
    if len(rows) == 2:
        (_, a1, w1_, s1), (_, a2, w2_, s2) = rows
        print(
            f"{'speedup':<10} {a1 / a2:>11.1f}x {w1_ / w2_:>11.1f}x {s1 / s2:>14.1f}x"
        )


if __name__ == "__main__":
    main()
