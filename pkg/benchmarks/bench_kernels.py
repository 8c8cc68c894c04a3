"""Benchmark: compiled tally kernel against the pure-Python fallback.

Runs the exhaustive output tally on a few sequence spaces with both
backends, checks they agree, and prints a timing table.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from onlinesearch import _pykernels

try:
    from onlinesearch import _kernels
except ImportError:
    _kernels = None

CASES = [
    # (low, high, length, threshold, second_hit)
    (1, 4, 6, 2, False),
    (1, 4, 6, 2, True),
    (1, 6, 7, 3, False),
    (1, 6, 8, 3, False),
]


def _time(fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not built; showing the pure backend only")

    header = f"{'case':<28} {'sequences':>12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for low, high, length, threshold, second_hit in CASES:
        total = (high - low + 1) ** length
        label = f"[{low},{high}] n={length} p={threshold}{' 2nd' if second_hit else ''}"
        pure_time, pure_counts = _time(
            _pykernels.count_outputs, (low, high, length, threshold, second_hit), args.repeat
        )
        if _kernels is not None:
            fast_time, fast_counts = _time(
                _kernels.count_outputs, (low, high, length, threshold, second_hit), args.repeat
            )
            assert list(pure_counts) == list(fast_counts), "backends disagree"
            print(f"{label:<28} {total:>12} {pure_time:>10.4f} {fast_time:>13.4f} "
                  f"{pure_time / fast_time:>8.1f}x")
        else:
            print(f"{label:<28} {total:>12} {pure_time:>10.4f} {'-':>13} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
