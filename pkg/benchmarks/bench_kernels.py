#!/usr/bin/env python
"""Compare the JIT-compiled kernels against the pure-numpy fallbacks.

Run after installing the package:

    python benchmarks/bench_kernels.py
    SHIFTKNOT_DISABLE_NUMBA=1 python benchmarks/bench_kernels.py  # fallback only
"""

import argparse
import time

import numpy as np

from shiftknot import _kernels
from shiftknot.basis import binomial_row, domain, make_config


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=10, help="curve degree (default 10)")
    parser.add_argument("--samples", type=int, default=200_000,
                        help="curve/basis sample count (default 200000)")
    parser.add_argument("--grid", type=int, default=200,
                        help="patch grid resolution per direction (default 200)")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    config = make_config(4.0, 6.0)
    n = args.degree
    dom = domain(config, n)
    ts = np.linspace(dom.lo, dom.hi, args.samples)
    binom = binomial_row(n)
    control = rng.uniform(-10.0, 10.0, size=(n + 1, 3))
    width = dom.hi - dom.lo
    wl = (dom.hi - ts) / width
    wr = (ts - dom.lo) / width
    net = rng.uniform(-10.0, 10.0, size=(7, 7, 3))
    gdom_u = domain(config, 6)
    gu = np.linspace(gdom_u.lo, gdom_u.hi, args.grid)
    rows_g = _kernels.basis_rows_batch_numpy(gu, gdom_u.lo, gdom_u.hi, binomial_row(6))

    cases = [
        ("basis_rows", _kernels.basis_rows_batch_numpy, _kernels.basis_rows_batch_jit,
         (ts, dom.lo, dom.hi, binom)),
        ("decasteljau", _kernels.decasteljau_batch_numpy, _kernels.decasteljau_batch_jit,
         (control, wl, wr)),
        ("patch_grid", _kernels.patch_grid_numpy, _kernels.patch_grid_jit,
         (net, rows_g, rows_g)),
    ]

    if _kernels.NUMBA_ENABLED:
        _kernels.warmup()
        print(f"{'kernel':<14} {'numpy':>12} {'numba':>12} {'speedup':>9}")
        for name, fn_np, fn_jit, call_args in cases:
            t_np = _time(fn_np, *call_args, repeat=args.repeat)
            t_jit = _time(fn_jit, *call_args, repeat=args.repeat)
            print(f"{name:<14} {t_np * 1e3:>10.2f}ms {t_jit * 1e3:>10.2f}ms {t_np / t_jit:>8.1f}x")
    else:
        print("numba disabled or unavailable; timing the numpy fallbacks only")
        print(f"{'kernel':<14} {'numpy':>12}")
        for name, fn_np, _, call_args in cases:
            t_np = _time(fn_np, *call_args, repeat=args.repeat)
            print(f"{name:<14} {t_np * 1e3:>10.2f}ms")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
