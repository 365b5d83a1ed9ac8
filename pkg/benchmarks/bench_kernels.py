#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure fallback.

Runs the two hot operations on growing instances with both backends and
prints a timing table.  Results are asserted equal before timings are
reported, so a speedup line is also an agreement check.

Usage:
    python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

from hyperlah import _pure

try:
    from hyperlah import _speedups
except ImportError:
    _speedups = None


def best_of(fn, args, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - start)
    return value, best


def bench(label, fn_name, args, repeats):
    # the pure backend is orders of magnitude slower; one timing suffices
    pure_value, pure_time = best_of(getattr(_pure, fn_name), args, 1)
    row = f"{label:<40} pure {pure_time * 1000:>10.2f} ms"
    if _speedups is not None:
        fast_value, fast_time = best_of(getattr(_speedups, fn_name), args, repeats)
        assert fast_value == pure_value, f"backend mismatch on {label}"
        row += f"   cython {fast_time * 1000:>9.2f} ms   speedup {pure_time / fast_time:>7.1f}x"
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller instances, fewer repeats")
    args = parser.parse_args()

    if _speedups is None:
        print("note: compiled extension not built; timing the pure backend only")

    repeats = 1 if args.quick else 5
    hist_cases = [(8, 2), (9, 2), (9, 4)] if args.quick else [(9, 2), (9, 4), (10, 4)]
    box_cases = [(6, 4, 12), (7, 4, 14)] if args.quick else [(8, 5, 20), (9, 4, 18), (9, 5, 22)]

    print("ordered-partition weight histograms")
    for n, m in hist_cases:
        bench(f"  weight_histogram(n={n}, m={m})", "weight_histogram", (n, m), repeats)
    print("box-slice point counts")
    for n, t, target in box_cases:
        bench(
            f"  count_box_slice(n={n}, t={t}, sum={target})",
            "count_box_slice",
            (n, t, target),
            repeats,
        )


if __name__ == "__main__":
    main()
