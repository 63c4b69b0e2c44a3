#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py
"""

import random
import time

from homrecol import _fallback
from homrecol.families import cycle_with_pendant, make_cycle_wrap, make_double_bridge

try:
    from homrecol import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_reduce():
    rng = random.Random(1)
    h = cycle_with_pendant(5)
    walk = [0]
    for _ in range(2_000_000):
        walk.append(rng.choice(h.adj[walk[-1]]))
    walk = tuple(walk)
    rows = [("pure", best_of(lambda: _fallback.reduce_sequence(walk)))]
    if _speedups:
        rows.append(("compiled", best_of(lambda: _speedups.reduce_sequence(walk))))
        assert _speedups.reduce_sequence(walk) == _fallback.reduce_sequence(walk)
    return "walk reduction (2M steps)", rows


def bench_hom_bfs():
    inst = make_double_bridge()
    g, h = inst.g, inst.h
    masks = [0] * h.n
    for v in range(h.n):
        for u in h.adj[v]:
            masks[v] |= 1 << u
    args = (g.adj, masks, inst.phi, inst.psi, 10**7)
    rows = [("pure", best_of(lambda: _fallback.hom_bfs(*args)))]
    if _speedups:
        rows.append(("compiled", best_of(lambda: _speedups.hom_bfs(*args))))
        assert _speedups.hom_bfs(*args) == _fallback.hom_bfs(*args)
    return "move-graph search (42k states)", rows


def bench_solve():
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from homrecol.families import make_cycle_wrap\n"
        "from homrecol.solver import solve\n"
        "inst = make_cycle_wrap(100_000, 4, 1)\n"
        "start = time.perf_counter()\n"
        "assert solve(inst).yes\n"
        "print(time.perf_counter() - start)\n"
    )

    def run(pure):
        env = dict(os.environ, HOMRECOL_PURE="1") if pure else {
            k: v for k, v in os.environ.items() if k != "HOMRECOL_PURE"
        }
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        )
        return float(out.stdout)

    rows = [("pure", run(pure=True))]
    if _speedups:
        rows.append(("compiled", run(pure=False)))
    return "end-to-end solve (100k-cycle wrap)", rows


def main():
    if _speedups is None:
        print("compiled kernels not built; showing pure-Python numbers only\n")
    for name, rows in [bench_reduce(), bench_hom_bfs(), bench_solve()]:
        print(name)
        base = rows[0][1]
        for label, seconds in rows:
            speedup = f"  ({base / seconds:4.1f}x)" if label != "pure" else ""
            print(f"  {label:9s} {seconds * 1000:9.1f} ms{speedup}")
        print()


if __name__ == "__main__":
    main()
