#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure Python/numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeat N]

Runs the scalar series kernel, the array kernel, and the coefficient
table builder through both paths and prints the speedups.  When the
package was imported with BCHYPER_NO_NUMBA=1 (or numba is missing)
only the fallback path is timed.
"""

import argparse
import time

import numpy as np

from bchyper import kernels

GAUSS_A = np.array([0.7 + 0.1j, 1.2 - 0.05j], dtype=np.complex128)
GAUSS_B = np.array([1.9 + 0.2j], dtype=np.complex128)


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_scalar(repeat):
    z = 0.6 + 0.2j

    def compiled():
        for _ in range(2000):
            kernels.series_sum(GAUSS_A, GAUSS_B, z, 1e-15, 10_000, 8)

    def fallback():
        for _ in range(2000):
            kernels._py_series_sum(GAUSS_A, GAUSS_B, z, 1e-15, 10_000, 8)

    return "series_sum x2000", timeit(compiled, repeat), timeit(fallback, repeat)


def bench_many(repeat):
    rng = np.random.default_rng(0)
    zs = 0.7 * rng.random(16384) * np.exp(2j * np.pi * rng.random(16384))

    def compiled():
        kernels.series_sum_many(GAUSS_A, GAUSS_B, zs, 1e-15, 10_000)

    def fallback():
        kernels.numpy_series_sum_many(GAUSS_A, GAUSS_B, zs, 1e-15, 10_000)

    return "series_sum_many 16384", timeit(compiled, repeat), timeit(fallback, repeat)


def bench_coeffs(repeat):
    def compiled():
        for _ in range(500):
            kernels.coeff_table(GAUSS_A, GAUSS_B, 400)

    def fallback():
        for _ in range(500):
            kernels._py_coeff_table(GAUSS_A, GAUSS_B, 400)

    return "coeff_table(400) x500", timeit(compiled, repeat), timeit(fallback, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"numba active: {kernels.USE_NUMBA}")
    if kernels.USE_NUMBA:
        # pay the compile cost outside the timings
        kernels.series_sum(GAUSS_A, GAUSS_B, 0.1 + 0j, 1e-15, 100, 8)
        kernels.series_sum_many(GAUSS_A, GAUSS_B, np.array([0.1 + 0j]), 1e-15, 100)
        kernels.coeff_table(GAUSS_A, GAUSS_B, 4)

    print(f"{'benchmark':<26}{'active path':>12}{'fallback':>12}{'speedup':>9}")
    for bench in (bench_scalar, bench_many, bench_coeffs):
        name, fast, slow = bench(args.repeat)
        print(f"{name:<26}{fast:>11.4f}s{slow:>11.4f}s{slow / fast:>8.1f}x")

    # same-result spot check across the two paths
    zs = np.array([0.5 + 0.1j, -0.3 + 0.4j, 0.72 + 0j])
    va, *_ = kernels.series_sum_many(GAUSS_A, GAUSS_B, zs, 1e-15, 10_000)
    vb, *_ = kernels.numpy_series_sum_many(GAUSS_A, GAUSS_B, zs, 1e-15, 10_000)
    print("max path disagreement:", float(np.max(np.abs(va - vb))))


if __name__ == "__main__":
    main()
