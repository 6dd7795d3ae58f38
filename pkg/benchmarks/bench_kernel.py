#!/usr/bin/env python3
"""Benchmark the compiled subset-scan kernel against the pure-Python walk.

Both backends compute the identical result (the tests enforce it); this
script shows what the compiled kernel buys on workloads shaped like the
Monte Carlo sweeps.  Run from the repository root:

    python benchmarks/bench_kernel.py [--quick]
"""

import argparse
import time

import numpy as np

from rtidnc import _scan_py
from rtidnc.experiments import generate_matrix
from rtidnc.solvers import CliqueSearchParams, _column_masks

try:
    from rtidnc import _kernel
except ImportError:
    _kernel = None


def pack(columns, n_rows):
    words = (n_rows + 63) // 64
    packed = np.zeros((len(columns), words), dtype=np.uint64)
    for c, mask in enumerate(columns):
        for w in range(words):
            packed[c, w] = (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return packed


def time_backend(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller cases, fewer repeats")
    args = parser.parse_args()

    cases = [
        ("sweep cell, easy loss", 20, 16, 0.45, 3),
        ("sweep cell, hard loss", 20, 16, 0.10, 3),
        ("wide matrix", 20, 20, 0.12, 3),
        ("tall matrix (two words)", 80, 14, 0.30, 3),
    ]
    if args.quick:
        cases = cases[:2]
    repeats = 2 if args.quick else 3

    print(f"compiled kernel available: {_kernel is not None}")
    header = f"{'case':28} {'n':>4} {'m':>3} {'p':>5} {'window':>8} {'pure (ms)':>10} {'kernel (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, n, m, p, delta in cases:
        matrix = generate_matrix(n, m, p, seed=1234)
        lo, hi = CliqueSearchParams(p, delta).window(m)
        columns = _column_masks(matrix)
        t_pure, r_pure = time_backend(lambda: _scan_py.scan(columns, n, lo, hi), repeats)
        if _kernel is not None:
            packed = pack(columns, n)
            t_kern, r_kern = time_backend(lambda: _kernel.scan(packed, n, lo, hi), repeats)
            assert r_kern == r_pure, "backends disagree"
            print(
                f"{name:28} {n:>4} {m:>3} {p:>5.2f} {f'[{lo},{hi}]':>8} "
                f"{t_pure * 1e3:>10.2f} {t_kern * 1e3:>12.3f} {t_pure / t_kern:>7.0f}x"
            )
        else:
            print(
                f"{name:28} {n:>4} {m:>3} {p:>5.2f} {f'[{lo},{hi}]':>8} "
                f"{t_pure * 1e3:>10.2f} {'-':>12} {'-':>8}"
            )


if __name__ == "__main__":
    main()
