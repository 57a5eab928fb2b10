"""Compare the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--window 7] [--degree 4]
       [--max-vars 3] [--repeat 5]
"""

import argparse
import time
from array import array
from itertools import permutations

from permtop import _kernels_py
from permtop.oracle import FiniteGroup

try:
    from permtop import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_commuting(impl, window, repeat):
    rows = sorted(permutations(range(window)))
    flat = array("i", [v for row in rows for v in row])
    h = array("i", rows[len(rows) // 3])
    return best_of(lambda: impl.commuting_rows(flat, window, h), repeat)


def bench_words(impl, degree, max_vars, repeat):
    g = FiniteGroup.symmetric(degree)
    return best_of(
        lambda: impl.word_inequality_masks(g._flat, g.order, max_vars), repeat
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=7,
                    help="window size for the commutation kernel")
    ap.add_argument("--degree", type=int, default=4,
                    help="symmetric group degree for the word kernel")
    ap.add_argument("--max-vars", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    jobs = [
        ("commuting_rows", lambda impl: bench_commuting(
            impl, args.window, args.repeat)),
        ("word_inequality_masks", lambda impl: bench_words(
            impl, args.degree, args.max_vars, args.repeat)),
    ]
    print(f"{'kernel':<24} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, job in jobs:
        pure = job(_kernels_py)
        if _speedups is None:
            print(f"{name:<24} {pure * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>9}")
            continue
        fast = job(_speedups)
        print(f"{name:<24} {pure * 1e3:>8.2f}ms {fast * 1e3:>8.2f}ms "
              f"{pure / fast:>8.1f}x")


if __name__ == "__main__":
    main()
