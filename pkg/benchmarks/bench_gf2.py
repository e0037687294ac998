#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernel against the pure-Python fallback.

The matrices are the real workload: boundary matrices of deleted joins and
of their quotients, plus dense random instances.  Usage:

    python3 benchmarks/bench_gf2.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from deljoin import _gf2py
from deljoin.complexes import discrete_points, join, simplex_skeleton
from deljoin.deleted import deleted_join
from deljoin.gf2 import chain_complex
from deljoin.index import quotient

try:
    from deljoin import _gf2kernel
except ImportError:
    _gf2kernel = None


def boundary_workload():
    cases = []
    for label, K in [
        ("deljoin(skeleton(4,1))", simplex_skeleton(4, 1)),
        ("deljoin(skeleton(6,2))", simplex_skeleton(6, 2)),
        ("deljoin(skeleton(8,3))", simplex_skeleton(8, 3)),
        ("deljoin(skeleton(6,2)*[3])", join(simplex_skeleton(6, 2),
                                            discrete_points(3))),
    ]:
        X = deleted_join(K)
        cc = chain_complex(X.complex)
        B = max(cc.boundaries, key=lambda b: b.nrows * b.ncols)
        cases.append((f"{label} boundary {B.nrows}x{B.ncols}",
                      list(B.rows), B.ncols))
        Q = quotient(X).to_chain_complex()
        BQ = max(Q.boundaries, key=lambda b: b.nrows * b.ncols)
        cases.append((f"{label} quotient {BQ.nrows}x{BQ.ncols}",
                      list(BQ.rows), BQ.ncols))
    rng = random.Random(42)
    for n in (256, 1024):
        rows = [rng.getrandbits(n) for _ in range(n)]
        cases.append((f"dense random {n}x{n}", rows, n))
    return cases


def time_once(fn, *args) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    ns = parser.parse_args()

    if _gf2kernel is None:
        print("compiled kernel unavailable; timing the pure backend only")

    header = f"{'case':<46} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, rows, ncols in boundary_workload():
        t_pure = min(time_once(_gf2py.rank, rows, ncols)[0]
                     for _ in range(ns.repeat))
        r_pure = _gf2py.rank(rows, ncols)
        if _gf2kernel is not None:
            t_comp = min(time_once(_gf2kernel.rank, rows, ncols)[0]
                         for _ in range(ns.repeat))
            r_comp = _gf2kernel.rank(rows, ncols)
            assert r_pure == r_comp, (label, r_pure, r_comp)
            speedup = t_pure / t_comp if t_comp > 0 else float("inf")
            print(f"{label:<46} {1000 * t_pure:>10.2f} "
                  f"{1000 * t_comp:>14.2f} {speedup:>7.1f}x")
        else:
            print(f"{label:<46} {1000 * t_pure:>10.2f} {'-':>14} {'-':>8}")


if __name__ == "__main__":
    main()
