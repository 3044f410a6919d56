#!/usr/bin/env python3
"""Compare the pure-Python and compiled search kernels.

Runs each kernel on identical random graphs and reports per-call times and
the speedup.  Results double as a correctness cross-check: both
implementations must return identical values.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import random
import statistics
import sys
import time

from sepdecomp.generators import gnp_graph
from sepdecomp.kernels import _ckernels, _pykernels


def bench(fn, args, repeats):
    times = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return result, min(times)


CASES = [
    # (label, kernel name, graph size, p, extra-args builder)
    ("min_balanced n=12", "min_balanced_separation", 12, 0.3, lambda G: (G.n,)),
    ("min_balanced n=16", "min_balanced_separation", 16, 0.25, lambda G: (G.n,)),
    ("min_w_balanced n=14", "min_w_balanced_separation", 14, 0.3,
     lambda G: ((1 << (G.n // 2)) - 1, G.n)),
    ("separation_number n=10", "separation_number", 10, 0.35, lambda G: ()),
    ("separation_number n=12", "separation_number", 12, 0.3, lambda G: ()),
    ("treewidth n=14", "treewidth", 14, 0.3, lambda G: ()),
    ("treewidth n=16", "treewidth", 16, 0.25, lambda G: ()),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels unavailable; nothing to compare", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    print(f"{'case':28} {'python':>12} {'compiled':>12} {'speedup':>9}")
    speedups = []
    for label, name, n, p, extra in CASES:
        G = gnp_graph(n, p, rng.randrange(1 << 30))
        call_args = (G.n, G.adj_masks) + extra(G)
        py_result, py_time = bench(getattr(_pykernels, name), call_args, args.repeats)
        c_result, c_time = bench(getattr(_ckernels, name), call_args, args.repeats)
        if py_result != c_result:
            print(f"MISMATCH in {label}: {py_result} vs {c_result}", file=sys.stderr)
            return 1
        speedup = py_time / c_time if c_time else float("inf")
        speedups.append(speedup)
        print(f"{label:28} {py_time * 1e3:10.2f}ms {c_time * 1e3:10.2f}ms {speedup:8.1f}x")
    print(f"\ngeometric-mean speedup: {statistics.geometric_mean(speedups):.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
