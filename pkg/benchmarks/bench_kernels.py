"""Benchmark the compiled involution-scan kernel against the pure fallback.

The oracle's hot loop streams fixed-point-free involutions and keeps those
whose forced third slot lands in the target class.  Both backends expose
the same ``scan_involutions_block`` entry point; this script swaps them in
behind the oracle, times the full weak count on a ladder of data, and
prints the speedup.

Run from the repository root after installing:

    python3 benchmarks/bench_kernels.py [--max-k 8] [--repeat 3] [--threads 1]
"""

from __future__ import annotations

import argparse
import time

from hurwitznum import FULL_MOVES, make_family_datum, weak_hurwitz
from hurwitznum import kernels, oracle
from hurwitznum import _purekernels

try:
    from hurwitznum import _speed
except ImportError:
    _speed = None


def ladder(max_k: int):
    """Data of increasing cost whose stream slot is the involution class."""
    out = []
    for k in range(5, max_k + 1):
        out.append(make_family_datum(0, 1, k, (2 * k - 2, 1, 1)))
        out.append(make_family_datum(2, 3, k, (2 * k,)))
    return out


def timed(datum, impl, repeat: int, threads: int) -> float:
    saved = kernels.scan_involutions_block
    kernels.scan_involutions_block = impl.scan_involutions_block
    try:
        best = float("inf")
        for _ in range(repeat):
            oracle._REPS_CACHE.clear()
            t0 = time.perf_counter()
            weak_hurwitz(datum, FULL_MOVES, threads=threads)
            best = min(best, time.perf_counter() - t0)
        return best
    finally:
        kernels.scan_involutions_block = saved


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-k", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    if _speed is None:
        print("compiled backend not available; run 'pip install -e .' first")
        return 1

    print(f"{'datum':<44}{'pure':>10}{'compiled':>10}{'speedup':>9}")
    for datum in ladder(args.max_k):
        t_pure = timed(datum, _purekernels, args.repeat, args.threads)
        t_fast = timed(datum, _speed, args.repeat, args.threads)
        print(
            f"{str(datum):<44}{t_pure * 1000:>8.1f}ms{t_fast * 1000:>8.1f}ms"
            f"{t_pure / t_fast:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
