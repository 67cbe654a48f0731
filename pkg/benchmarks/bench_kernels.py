"""Compare the numba kernels with the pure Python / numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Search runs ``search_kernel`` compiled vs. its ``py_func``; enumeration runs
the compiled odometer vs. the vectorised numpy scan. Both paths are checked
to return identical answers before timing is reported.
"""
import argparse
import time

import numpy as np

from jrainbow import kernels
from jrainbow.graph import CompleteMultipartiteGraph, CycleGraph, Graph, WheelGraph
from jrainbow.solver import Mode, constrained_mask, search_order

FIG1 = Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 5), (1, 4), (2, 7), (3, 6)])

SEARCH_CASES = [
    ("C_30 k=3", CycleGraph(30).generate(), 3),
    ("C_31 k=3", CycleGraph(31).generate(), 3),
    ("W_25 k=4", WheelGraph(24).generate(), 4),
    ("W_26 k=4", WheelGraph(25).generate(), 4),
    ("K_4,4,4,4 k=5", CompleteMultipartiteGraph((4, 4, 4, 4)).generate(), 5),
]

ENUM_CASES = [
    ("C_9 k=2", CycleGraph(9).generate(), 2),
    ("fig1 k=3", FIG1, 3),
    ("W_9 k=3", WheelGraph(8).generate(), 3),
    ("C_12 k=3", CycleGraph(12).generate(), 3),
]


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def bench_search(repeat):
    rows = []
    for name, g, k in SEARCH_CASES:
        indptr, indices = g.csr
        args = (g.n, k, search_order(g), indptr, indices, constrained_mask(g, Mode.J))
        kernels.search_kernel(*args)
        t_jit, a = best_of(lambda: kernels.search_kernel(*args), repeat)
        t_py, b = best_of(lambda: kernels.search_kernel.py_func(*args), repeat)
        assert a[0] == b[0] and np.array_equal(a[1], b[1]), name
        rows.append((name, t_jit, t_py))
    return rows


def bench_enumerate(repeat):
    rows = []
    for name, g, k in ENUM_CASES:
        indptr, indices = g.csr
        mask = constrained_mask(g, Mode.J)
        total = k ** g.n
        args = (g.n, k, indptr, indices, mask, 0, total)
        kernels.enumerate_kernel(*args)
        t_jit, a = best_of(lambda: kernels.enumerate_kernel(*args), repeat)
        t_np, b = best_of(lambda: kernels.enumerate_numpy(*args), repeat)
        assert a == b, name
        rows.append((name, t_jit, t_np))
    return rows


def report(title, rows, other):
    print(f"\n{title}")
    print(f"{'case':<16} {'numba (ms)':>12} {other + ' (ms)':>16} {'speed-up':>10}")
    for name, fast, slow in rows:
        print(f"{name:<16} {fast * 1e3:>12.3f} {slow * 1e3:>16.3f} {slow / max(fast, 1e-9):>9.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    report("backtracking search", bench_search(args.repeat), "python")
    report("exhaustive enumeration", bench_enumerate(args.repeat), "numpy")


if __name__ == "__main__":
    main()
