#!/usr/bin/env python3
"""Benchmark the quadrature kernels: compiled extension vs numpy fallback.

Runs both implementations (when the extension is importable) on the same
inputs, checks they agree, and prints timings per kernel and size.

    python benchmarks/bench_kernels.py [--sizes 1024,4096,8192] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from fracquat import _kernels_py

try:
    from fracquat import _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn, values, h, alpha, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(values, h, alpha)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1024,4096,8192")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--alpha", type=float, default=0.5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels_c is None:
        print("compiled extension not available; timing the numpy fallback only\n")

    kernels = [("l1_caputo", "l1_caputo_kernel"), ("rl_integral", "rl_integral_kernel")]
    header = f"{'kernel':<12} {'N':>6} {'numpy':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, attr in kernels:
        for n in sizes:
            x = np.linspace(0.0, 1.0, n + 1)
            values = (x**2 + 1j * x**3).astype(np.complex128)
            h = 1.0 / n
            t_py = _time(getattr(_kernels_py, attr), values, h, args.alpha, args.repeat)
            if _kernels_c is not None:
                t_c = _time(getattr(_kernels_c, attr), values, h, args.alpha, args.repeat)
                out_py = getattr(_kernels_py, attr)(values, h, args.alpha)
                out_c = getattr(_kernels_c, attr)(values, h, args.alpha)
                scale = np.abs(out_py).max()
                gap = np.abs(out_py - out_c).max() / scale if scale else 0.0
                if gap > 1e-12:
                    raise AssertionError(f"backend mismatch for {label} at N={n}: {gap:.2e}")
                print(f"{label:<12} {n:>6} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms {t_py / t_c:>7.2f}x")
            else:
                print(f"{label:<12} {n:>6} {t_py * 1e3:>10.2f}ms {'-':>12} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
