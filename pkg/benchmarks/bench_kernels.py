#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled graph-construction kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

The dominance scan behind closure construction is quadratic in the node
count and dominates the oracle suite, which is why the compiled lane
exists; Hasse construction is output-linear and close to parity.
"""

import argparse
import time

from divgraph import _kernels_py

try:
    from divgraph import _kernels_c
except ImportError:
    _kernels_c = None

CASES = [
    ("closure", (1,) * 9, "closure_arcs"),
    ("closure", (2, 2) + (1,) * 6, "closure_arcs"),
    ("closure", (3, 2, 1, 1, 1, 1), "closure_arcs"),
    ("closure", (9, 9, 9), "closure_arcs"),
    ("closure", (4, 4, 4, 4), "closure_arcs"),
    # the two heaviest shapes of the oracle corpus
    ("closure", (1,) * 12, "closure_arcs"),
    ("closure", (2, 2) + (1,) * 9, "closure_arcs"),
    ("hasse", (1,) * 12, "hasse_arcs"),
    ("hasse", (4, 4, 4, 4), "hasse_arcs"),
]


def timed(func, bounds, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(bounds)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not built; showing pure lane only")
    header = f"{'kernel':8} {'bounds':22} {'arcs':>9} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, bounds, name in CASES:
        pure_func = getattr(_kernels_py, name)
        pure_time, pure_result = timed(pure_func, bounds, args.repeat)
        if _kernels_c is not None:
            fast_func = getattr(_kernels_c, name)
            fast_time, fast_result = timed(fast_func, bounds, args.repeat)
            assert fast_result == pure_result, f"lane mismatch on {bounds}"
            print(
                f"{label:8} {str(bounds):22} {len(pure_result):>9} "
                f"{pure_time:>9.3f}s {fast_time:>9.3f}s {pure_time / fast_time:>7.1f}x"
            )
        else:
            print(f"{label:8} {str(bounds):22} {len(pure_result):>9} {pure_time:>9.3f}s {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
