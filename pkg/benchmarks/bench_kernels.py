#!/usr/bin/env python3
"""Benchmark the compiled recurrence kernels against the numpy fallback.

Workloads mirror the expensive call sites: ratio studies and error sweeps
over 1e5-point grids, series evaluation, Newton node refinement, and the
coefficient projections.
"""

import time

import numpy as np

from legbounds import _kernels_py

try:
    from legbounds import _ckernels
except ImportError:
    _ckernels = None

rng = np.random.default_rng(0)
GRID = rng.uniform(-1.0, 1.0, size=100_000)
INNER = rng.uniform(-0.999, 0.999, size=5_000)
WEIGHTS = (1.0 - GRID * GRID) ** 0.25
COEFFS = rng.standard_normal(800) / (1.0 + np.arange(800.0)) ** 1.5
REF = np.abs(GRID)
NODES = rng.uniform(-0.999, 0.999, size=600)
FW = rng.standard_normal(600)

WORKLOADS = [
    ("eval_at(200, 1e5 grid)", lambda k: k.eval_at(200, GRID)),
    ("eval_with_derivative(2000, 5e3 pts)", lambda k: k.eval_with_derivative(2000, INNER)),
    ("series_eval(800 coeffs, 1e5 grid)", lambda k: k.series_eval(COEFFS, GRID)),
    ("degree_weighted_absmax(200, 1e5 grid)",
     lambda k: k.degree_weighted_absmax(GRID, WEIGHTS, 200)),
    ("running_sup_errors(800, 1e5 grid)",
     lambda k: k.running_sup_errors(COEFFS, GRID, REF)),
    ("weighted_moments(600 nodes, n<=800)", lambda k: k.weighted_moments(NODES, FW, 800)),
]


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    if _ckernels is None:
        print("compiled extension not available; nothing to compare")
        print("(the package keeps working on the numpy fallback)")
        return
    print(f"{'workload':<40} {'numpy':>10} {'cython':>10} {'speedup':>9}")
    print("-" * 73)
    for name, call in WORKLOADS:
        t_py = best_of(lambda: call(_kernels_py))
        t_cy = best_of(lambda: call(_ckernels))
        print(f"{name:<40} {t_py * 1e3:>8.2f}ms {t_cy * 1e3:>8.2f}ms "
              f"{t_py / t_cy:>8.2f}x")


if __name__ == "__main__":
    main()
