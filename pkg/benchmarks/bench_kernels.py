#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times each hot kernel on a fixed input set with timeit and prints ns/call
for both backends plus the speedup.  Run from the repo root:

    python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import math
import random
import timeit

from rodvec import _kernels_py as kp

try:
    from rodvec import _kernels_cy as kc
except ImportError:
    kc = None


def _inputs(n=256, seed=12345):
    rng = random.Random(seed)
    qs, ns, thetas, mats = [], [], [], []
    for _ in range(n):
        while True:
            v = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
            nn = math.sqrt(sum(x * x for x in v))
            if nn > 1e-3:
                break
        axis = tuple(x / nn for x in v)
        theta = rng.uniform(-(math.pi - 1e-3), math.pi - 1e-3)
        t = math.tan(theta / 2)
        ns.append(axis)
        thetas.append(theta)
        qs.append(tuple(t * x for x in axis))
        mats.append(kp.rot_from_rod9(qs[-1]))
    return qs, ns, thetas, mats


QS, NS, THETAS, MATS = _inputs()

CASES = {
    "euler_rodrigues9": lambda k: [k.euler_rodrigues9(n, t) for n, t in zip(NS, THETAS)],
    "rot_from_rod9": lambda k: [k.rot_from_rod9(q) for q in QS],
    "cayley_rot9": lambda k: [k.cayley_rot9(q) for q in QS],
    "cayley_inv9": lambda k: [k.cayley_inv9(q) for q in QS],
    "rod_from_rot9": lambda k: [k.rod_from_rot9(m) for m in MATS],
    "compose_num_den": lambda k: [k.compose_num_den(a, b) for a, b in zip(QS, QS[::-1])],
    "matmul": lambda k: [k.matmul(a, b) for a, b in zip(MATS, MATS[::-1])],
    "rot_residuals9": lambda k: [k.rot_residuals9(m) for m in MATS],
}


def bench(kernel_module, fn, repeats: int) -> float:
    timer = timeit.Timer(lambda: fn(kernel_module))
    loops, _ = timer.autorange()
    best = min(timer.repeat(repeats, loops))
    return best / loops / len(QS) * 1e9  # ns per kernel call


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<18} {'python ns/op':>14} {'compiled ns/op':>16} {'speedup':>9}")
    for name, fn in CASES.items():
        py = bench(kp, fn, args.repeats)
        if kc is None:
            print(f"{name:<18} {py:>14.0f} {'n/a':>16} {'n/a':>9}")
            continue
        cy = bench(kc, fn, args.repeats)
        print(f"{name:<18} {py:>14.0f} {cy:>16.0f} {py / cy:>8.1f}x")
    if kc is None:
        print("\ncompiled backend not built; install with Cython for the comparison")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
