#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot loops on realistic workloads (cover-ideal powers of the
built-in family) under both backends and prints a comparison table.

    python benchmarks/bench_kernels.py [--t 2] [--n 4] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from coverideals import _kernels, build_ht, cover_ideal, power
from coverideals.ideals import multiply


def _timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def workloads(t: int, n: int):
    g = build_ht(t)
    J = cover_ideal(g)
    base = power(J, n - 1)
    rows = (
        base.exponents[:, None, :] + J.exponents[None, :, :]
    ).reshape(-1, g.n_vertices)
    rows = np.unique(rows, axis=0)
    queries = np.unique(
        rows + np.ones_like(rows), axis=0
    )
    comps = np.unique(np.minimum(rows, n + 1), axis=0)
    return {
        "minimal_mask": lambda: _kernels.minimal_mask(rows),
        "divides_mask": lambda: _kernels.divides_mask(base.exponents, queries),
        "component_minimal_mask": lambda: _kernels.component_minimal_mask(comps),
        "multiply": lambda: multiply(base, J),
    }, rows.shape


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t", type=int, default=2, help="family parameter")
    parser.add_argument("--n", type=int, default=4, help="cover-ideal power")
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats")
    args = parser.parse_args()

    work, shape = workloads(args.t, args.n)
    print(f"workload: ht-{args.t} power {args.n}, candidate matrix {shape[0]}x{shape[1]}")
    print(f"{'kernel':<24} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name, fn in work.items():
        times = {}
        for backend in ("numba", "numpy"):
            _kernels.use_backend(backend)
            fn()  # warm up (jit compile / cache load)
            times[backend], _ = _timed(fn, args.repeat)
        _kernels.use_backend("auto")
        ratio = times["numpy"] / times["numba"] if times["numba"] > 0 else float("inf")
        print(
            f"{name:<24} {times['numba']*1e3:>8.1f}ms {times['numpy']*1e3:>8.1f}ms"
            f" {ratio:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
