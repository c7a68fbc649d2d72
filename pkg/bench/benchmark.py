#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the two hot paths — the pruned group search and the exhaustive
linking sweep — on both backends and prints the speedup.  Run from the
repository root:

    python3 bench/benchmark.py
"""

import time

from gerbe import _kernels_py
from gerbe.fixtures import POINTED_HEXAGON
from gerbe.graph import epsilon_matrix

try:
    from gerbe import _speedups
except ImportError:
    _speedups = None


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(label, fn_name, *args, repeat=5):
    py_t, py_r = timeit(getattr(_kernels_py, fn_name), *args, repeat=repeat)
    if _speedups is None:
        print(f"{label:34} python {py_t * 1e3:9.2f} ms   (no compiled backend)")
        return
    c_t, c_r = timeit(getattr(_speedups, fn_name), *args, repeat=repeat)
    assert sorted(py_r) == sorted(c_r) if isinstance(py_r, list) else py_r == c_r
    print(f"{label:34} python {py_t * 1e3:9.2f} ms   "
          f"compiled {c_t * 1e3:9.2f} ms   x{py_t / c_t:6.1f}")


def main():
    masks = epsilon_matrix(POINTED_HEXAGON.graph).linked_masks()
    bench("signed_stabilizer (6 vertices)", "signed_stabilizer", masks)
    bench("naive_signed_elements (6 verts)", "naive_signed_elements", masks, repeat=3)
    bench("linking_sweep n=5, c=+1", "linking_sweep", 5, 1)
    bench("linking_sweep n=6, c=-1", "linking_sweep", 6, -1, repeat=2)


if __name__ == "__main__":
    main()
