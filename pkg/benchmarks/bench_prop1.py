#!/usr/bin/env python3
"""Compare the numba and numpy backends of the exhaustive law sweep.

Run as `python benchmarks/bench_prop1.py [--repeat N]`.  The first numba
call includes JIT compilation; it is timed separately from the warm runs.
"""

import argparse
import time

from finlink.sweep import all_bars, all_tables, compute_flags, prop1_sweep


def time_backend(name: str, n: int, repeat: int) -> list[float]:
    tables, bars = all_tables(n), all_bars(n)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        compute_flags(tables, bars, backend=name)
        times.append(time.perf_counter() - start)
    return times


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--size", type=int, default=3)
    args = parser.parse_args()

    n = args.size
    systems = len(all_tables(n)) * len(all_bars(n))
    print(f"sweep of {systems} systems at size {n}")

    cold = time_backend("numba", n, 1)[0]
    print(f"numba cold (includes JIT): {cold:.3f}s")
    for name in ("numba", "numpy"):
        times = time_backend(name, n, args.repeat)
        best = min(times)
        rate = systems / best / 1e6
        print(f"{name:>6}: best of {args.repeat}: {best:.3f}s  ({rate:.1f}M systems/s)")

    result = prop1_sweep(n)
    print(result.summary())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
