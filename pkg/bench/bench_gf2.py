#!/usr/bin/env python3
"""Benchmark the row-reduction kernel: active backend vs pure-numpy fallback.

Run normally this compares the numba kernel against the numpy path; with
QCLEAN_NO_NUMBA set both columns use the fallback (useful as a sanity
check that the flag works).

    python3 bench/bench_gf2.py [--repeats N]
"""

import argparse
import time

import numpy as np

from qclean._kernels import _rref_numpy, backend_name, rref_words

SHAPES = [(32, 32), (64, 64), (128, 128), (256, 256), (512, 512), (256, 1024)]


def bench(fn, mats, ncols, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in mats:
            fn(m.copy(), ncols)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--batch", type=int, default=20, help="matrices per timing")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"active backend: {backend_name()}")
    print(f"{'shape':>12} {'active (ms)':>12} {'numpy (ms)':>12} {'speedup':>8}")
    # warm up any JIT compilation outside the timed region
    warm = rng.integers(0, 2, size=(8, 8), dtype=np.uint8)
    from qclean.gf2 import BinaryMatrix

    rref_words(BinaryMatrix.from_dense(warm).words.copy(), 8)

    for rows, cols in SHAPES:
        mats = [
            BinaryMatrix.from_dense(
                rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
            ).words
            for _ in range(args.batch)
        ]
        t_active = bench(rref_words, mats, cols, args.repeats)
        t_numpy = bench(_rref_numpy, mats, cols, args.repeats)
        print(
            f"{rows}x{cols:>5} {t_active * 1e3:12.2f} {t_numpy * 1e3:12.2f}"
            f" {t_numpy / t_active:8.1f}x"
        )


if __name__ == "__main__":
    main()
