#!/usr/bin/env python3
"""Benchmark the compiled canonical-form kernel against the pure-Python path.

Times both kernels on a census-style workload (every weight multiset in a
box) and reports throughput and speedup.  The compiled kernel is skipped
gracefully if it did not build.

    python3 benchmarks/bench_backends.py --dim 2 --max-weight 120 --repeat 3
"""

import argparse
import time
from itertools import combinations_with_replacement

from wproj import _kernels_py

try:
    from wproj import _kernels_cy
except ImportError:
    _kernels_cy = None


def workload(dim: int, max_weight: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(1, max_weight + 1), dim + 1))


def time_kernel(fn, vectors, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for w in vectors:
            fn(w)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--max-weight", type=int, default=120)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    vectors = workload(args.dim, args.max_weight)
    print(f"workload: {len(vectors)} vectors, dimension {args.dim}, entries <= {args.max_weight}")

    kernels = [("python", _kernels_py.canonical_pair)]
    if _kernels_cy is not None:
        kernels.append(("cython", _kernels_cy.canonical_pair))
    else:
        print("compiled kernel not built; timing the pure path only")

    # both kernels must agree on the workload before being timed
    if _kernels_cy is not None:
        for w in vectors[:: max(1, len(vectors) // 500)]:
            assert _kernels_cy.canonical_pair(w) == _kernels_py.canonical_pair(w), w

    results = {}
    for name, fn in kernels:
        best = time_kernel(fn, vectors, args.repeat)
        results[name] = best
        print(f"{name:>7}: {best:8.3f} s  ({len(vectors) / best:>12,.0f} vectors/s)")

    if len(results) == 2:
        print(f"speedup: {results['python'] / results['cython']:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
