"""Benchmark: compiled simplex kernel vs the pure-NumPy fallback.

Times phase-1 LP solves of hull-membership shape (A = [P^T; 1^T]) across a
few problem sizes, checks that both backends return identical results, and
prints a speedup table.  Run as:

    python3 benchmarks/bench_simplex.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hullprobe.lp import _simplex_py

try:
    from hullprobe.lp import _simplex as _simplex_c
except ImportError:
    _simplex_c = None


def make_instances(d: int, n: int, count: int, seed: int):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        pts = rng.normal(size=(n, d))
        q = rng.normal(size=d) * rng.uniform(0.2, 1.2)
        A = np.vstack([pts.T, np.ones(n)])
        b = np.append(q, 1.0)
        out.append((A, b))
    return out


def run(kernel, instances, repeat: int) -> tuple[float, list]:
    best = np.inf
    results = []
    for _ in range(repeat):
        start = time.perf_counter()
        results = [kernel.phase1(A, b, 1e-9) for A, b in instances]
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _simplex_c is None:
        print("compiled backend not available; nothing to compare")
        return 1

    sizes = [(2, 16, 400), (2, 128, 200), (3, 512, 60), (4, 1024, 30)]
    print(f"{'d':>3} {'n':>5} {'LPs':>5} {'python':>10} {'cython':>10} {'speedup':>8}")
    for d, n, count in sizes:
        instances = make_instances(d, n, count, args.seed)
        t_py, res_py = run(_simplex_py, instances, args.repeat)
        t_cy, res_cy = run(_simplex_c, instances, args.repeat)
        for (vp, xp, yp, pp), (vc, xc, yc, pc) in zip(res_py, res_cy):
            assert vp == vc and pp == pc
            assert np.array_equal(xp, xc) and np.array_equal(yp, yc)
        print(
            f"{d:>3} {n:>5} {count:>5} {t_py:>9.4f}s {t_cy:>9.4f}s "
            f"{t_py / t_cy:>7.1f}x"
        )
    print("results identical across backends (bitwise)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
