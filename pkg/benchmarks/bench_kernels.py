"""Compare the numba and numpy fixed-point kernels on a full class sweep.

The measured work is exactly what one character vector costs: for every
conjugacy class of S_n, count the uniform partitions fixed by the class
representative. Backends must agree on every count; the summary reports
per-backend wall time and the speedup.

    python3 benchmarks/bench_kernels.py             # n=12, 3 blocks of 4
    python3 benchmarks/bench_kernels.py --full      # n=15, 3 blocks of 5
"""

import argparse
import sys
from time import perf_counter

from basechar import kernels
from basechar.kernels import (count_fixed_partitions, representative_perm,
                              uniform_partition_table)
from basechar.partitions import enumerate_cycle_types


def sweep(n, r, s, backend):
    blocks = uniform_partition_table(n, r, s)
    counts = []
    started = perf_counter()
    for ct in enumerate_cycle_types(n):
        perm = representative_perm(ct)
        counts.append(count_fixed_partitions(blocks, perm, backend=backend))
    return counts, perf_counter() - started


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true",
                        help="benchmark n=15 (126126 partitions) instead of "
                             "n=12 (5775 partitions)")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    n, r, s = (15, 3, 5) if args.full else (12, 3, 4)
    blocks = uniform_partition_table(n, r, s)
    classes = len(list(enumerate_cycle_types(n)))
    print(f"n={n}, {r} blocks of size {s}: {blocks.shape[0]} partitions, "
          f"{classes} classes")

    if not kernels.HAS_NUMBA:
        print("numba not importable; only the numpy path is available")
        counts, elapsed = sweep(n, r, s, "numpy")
        print(f"numpy: {elapsed:.3f}s, identity count {counts[-1]}")
        return 0

    # warm up the jit once so compilation is not measured
    count_fixed_partitions(blocks[:1], representative_perm(
        next(iter(enumerate_cycle_types(n)))), backend="numba")

    times = {"numba": [], "numpy": []}
    reference = None
    for _ in range(args.repeats):
        for backend in times:
            counts, elapsed = sweep(n, r, s, backend)
            times[backend].append(elapsed)
            if reference is None:
                reference = counts
            elif counts != reference:
                print(f"FATAL: {backend} counts diverge", file=sys.stderr)
                return 1

    best_numba = min(times["numba"])
    best_numpy = min(times["numpy"])
    print(f"numba: best of {args.repeats}: {best_numba:.3f}s")
    print(f"numpy: best of {args.repeats}: {best_numpy:.3f}s")
    print(f"speedup: {best_numpy / best_numba:.1f}x, all "
          f"{len(reference)} class counts identical")
    return 0


if __name__ == "__main__":
    sys.exit(main())
