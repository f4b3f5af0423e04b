#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--sizes 100,500,2000] [--repeats 5]

Useful when deciding whether a deployment without a working numba
install (CASTINSPECT_NUMBA=0) can keep up with its camera.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from castinspect import kernels


def random_boxes(rng: np.random.Generator, n: int) -> np.ndarray:
    xy = rng.uniform(0, 2400, size=(n, 2))
    wh = rng.uniform(4, 120, size=(n, 2))
    return np.hstack([xy, wh])


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100,500,2000")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not kernels.NUMBA_ENABLED:
        print("numba path unavailable (disabled or not installed); "
              "benchmarking numpy only\n")
    else:
        kernels.warmup()

    pairs = [
        ("iou_matrix", kernels._iou_matrix_numpy,
         kernels._iou_matrix_numba if kernels.NUMBA_ENABLED else None,
         lambda b: (b, b)),
        ("nms_keep", kernels._nms_keep_numpy,
         kernels._nms_keep_numba if kernels.NUMBA_ENABLED else None,
         lambda b: (b, 0.15)),
        ("center_distance", kernels._center_distance_matrix_numpy,
         kernels._center_distance_matrix_numba if kernels.NUMBA_ENABLED else None,
         lambda b: (b, b)),
    ]

    rng = np.random.default_rng(7)
    header = f"{'kernel':<16} {'n':>6} {'numpy':>12} {'numba':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        boxes = random_boxes(rng, n)
        for name, numpy_fn, numba_fn, make_args in pairs:
            call_args = make_args(boxes)
            t_numpy = best_of(lambda: numpy_fn(*call_args), args.repeats)
            if numba_fn is None:
                print(f"{name:<16} {n:>6} {t_numpy * 1e3:>10.2f}ms {'-':>12} {'-':>8}")
                continue
            numba_fn(*call_args)  # ensure compiled for this signature
            t_numba = best_of(lambda: numba_fn(*call_args), args.repeats)
            print(f"{name:<16} {n:>6} {t_numpy * 1e3:>10.2f}ms "
                  f"{t_numba * 1e3:>10.2f}ms {t_numpy / t_numba:>7.1f}x")


if __name__ == "__main__":
    main()
