#!/usr/bin/env python3
"""Benchmark the compiled exact kernels against the pure-Python fallback.

Times the Bareiss determinant, the Faddeev-LeVerrier characteristic
polynomial, and the full evaluation-interpolation characteristic
polynomial on the model adjacency matrices of the standard grid.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from powspec.exact_linalg import IntMatrix, matrix_of, _newton_interpolate_integer, _shifted_rows
from powspec.kernels import available_backends
from powspec.powergraph import build_model_graph

GRID = [(2, 3), (2, 5), (3, 3)]


def time_call(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def charpoly_interp(backend, m: IntMatrix) -> list[int]:
    xs = list(range(m.n + 1))
    ys = [backend.det_bareiss(_shifted_rows(m, x)) for x in xs]
    return _newton_interpolate_integer(xs, ys)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; benchmarking pure-python only")

    rows = []
    for k, p in GRID:
        m = matrix_of(build_model_graph(k, p), "adjacency")
        shifted = _shifted_rows(m, m.n)
        for task, runner in [
            ("det", lambda be: be.det_bareiss(shifted)),
            ("leverrier", lambda be: be.charpoly_leverrier(m.to_lists())),
            ("charpoly-interp", lambda be: charpoly_interp(be, m)),
        ]:
            timings = {
                name: time_call(runner, be, repeat=args.repeat)
                for name, be in backends.items()
            }
            rows.append(((k, p), m.n, task, timings))

    print(f"{'case':>8} {'n':>4} {'task':>16} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for (k, p), n, task, timings in rows:
        pure = timings["pure-python"]
        comp = timings.get("compiled")
        speed = f"{pure / comp:.2f}x" if comp else "-"
        comp_s = f"{comp:.4f}" if comp else "-"
        print(f"  ({k},{p}) {n:>4} {task:>16} {pure:>10.4f} {comp_s:>13} {speed:>8}")


if __name__ == "__main__":
    main()
