#!/usr/bin/env python3
"""Time the numba and numpy enumeration kernels on the full height grid.

    python3 benchmarks/bench_kernels.py --orders 5 6 7 --runs 3
"""

import argparse
import json
import statistics
import time

import numpy as np

from catalania import _kernels


def _time(fn, runs):
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), out


def bench(order, runs):
    top = order - 1
    grid = _kernels.candidate_grid(order, top)
    row = {"order": order, "grid": int(grid.shape[0])}
    results = {}
    for name, flag in (("numpy", False), ("numba", True)):
        if flag and not _kernels.HAVE_NUMBA:
            continue
        if flag:
            # compile outside the timed region
            _kernels.unique_depletes(2, 1, use_numba=True)
        mask_t, mask = _time(lambda: _kernels.boundary_mask(grid, flag), runs)
        dep_t, dep = _time(lambda: _kernels.deplete_batch(grid[mask], flag), runs)
        row[f"{name}_mask_s"] = round(mask_t, 4)
        row[f"{name}_deplete_s"] = round(dep_t, 4)
        results[name] = np.unique(dep, axis=0)
    if len(results) == 2:
        assert np.array_equal(results["numpy"], results["numba"]), order
        total_np = row["numpy_mask_s"] + row["numpy_deplete_s"]
        total_nb = row["numba_mask_s"] + row["numba_deplete_s"]
        row["speedup"] = round(total_np / total_nb, 1) if total_nb else None
    row["classes"] = int(next(iter(results.values())).shape[0])
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--orders", type=int, nargs="+", default=[4, 5, 6, 7])
    ap.add_argument("--runs", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print one JSON object per order")
    args = ap.parse_args()
    for order in args.orders:
        row = bench(order, args.runs)
        if args.json:
            print(json.dumps(row, sort_keys=True))
        else:
            print("  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
