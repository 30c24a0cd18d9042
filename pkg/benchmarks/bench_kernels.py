#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--ns 2001] [--nt 1001] [--repeat 5]
"""

import argparse
import time

import numpy as np

from rogonlab import _kernels, _kernels_np


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ns", type=int, default=2001)
    ap.add_argument("--nt", type=int, default=1001)
    ap.add_argument("--n-modes", type=int, default=1 << 16)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    S = np.linspace(-8.0, 8.0, args.ns)
    t = np.linspace(-4.0, 4.0, args.nt)
    print(f"active backend: {_kernels.BACKEND}")
    print(f"grid evaluation, {args.ns} x {args.nt} points:")
    for order in (1, 2):
        t_cy = best_of(
            lambda: _kernels.rogon_grid(order, 1.5, 1.0, 2.0, 5.0, 0.5, S, t),
            args.repeat,
        )
        t_np = best_of(
            lambda: _kernels_np.rogon_grid(order, 1.5, 1.0, 2.0, 5.0, 0.5, S, t),
            args.repeat,
        )
        print(
            f"  order {order}: active {t_cy * 1e3:8.2f} ms   "
            f"numpy {t_np * 1e3:8.2f} ms   speedup {t_np / t_cy:5.2f}x"
        )

    rng = np.random.default_rng(0)
    sigma = rng.normal(size=args.n_modes) + 1j * rng.normal(size=args.n_modes)
    psi = rng.normal(size=args.n_modes) + 1j * rng.normal(size=args.n_modes)
    print(f"nonlinear phase rotation, {args.n_modes} modes:")
    t_cy = best_of(lambda: _kernels.nonlinear_phase(sigma, psi, 1e-3), args.repeat)
    t_np = best_of(lambda: _kernels_np.nonlinear_phase(sigma, psi, 1e-3), args.repeat)
    print(
        f"  active {t_cy * 1e3:8.2f} ms   numpy {t_np * 1e3:8.2f} ms   "
        f"speedup {t_np / t_cy:5.2f}x"
    )


if __name__ == "__main__":
    main()
