#!/usr/bin/env python3
"""Benchmark the compiled grid-oracle kernel against the pure-Python twin.

The workload is the verifier's hot loop: classify every point of an
(n+1) x (n+1) grid three ways for a batch of random games.  Run as

    python benchmarks/bench_kernels.py [--games N] [--grid N] [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from twobytwo import verify
from twobytwo.equilibria import nash_set
from twobytwo.kernels import _gridkernel_py

try:
    from twobytwo.kernels import _gridkernel
except ImportError:
    _gridkernel = None


def prepare(games, grid):
    inputs = []
    for game in games:
        inputs.append(
            (
                verify.integerize(game.row),
                verify.integerize(game.col),
                verify.grid_ranges(nash_set(game), grid),
            )
        )
    return inputs


def run(kernel, inputs, grid):
    start = time.perf_counter()
    for h_row, h_col, boxes in inputs:
        result = kernel.grid_oracle(grid, h_row, h_col, boxes)
        if result is not None:
            raise AssertionError(f"oracle mismatch {result}")
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--games", type=int, default=200)
    parser.add_argument("--grid", type=int, default=100)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    games = [verify.random_game(rng) for _ in range(args.games)]
    inputs = prepare(games, args.grid)
    points = args.games * (args.grid + 1) ** 2

    backends = [("python", _gridkernel_py)]
    if _gridkernel is not None:
        backends.insert(0, ("compiled", _gridkernel))
    else:
        print("compiled kernel not built; benchmarking the pure twin only")

    results = {}
    for name, kernel in backends:
        times = [run(kernel, inputs, args.grid) for _ in range(args.repeat)]
        best = min(times)
        results[name] = best
        print(
            f"{name:9s} best {best * 1000:9.1f} ms   "
            f"median {statistics.median(times) * 1000:9.1f} ms   "
            f"{points / best / 1e6:8.2f} Mpoints/s"
        )
    if len(results) == 2:
        print(f"speedup   x{results['python'] / results['compiled']:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
