#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

The scans aggregate descent statistics over every element of the signed
permutation group (2^n * n! windows) or the plain symmetric group, which
is the only hot loop in the library.  Results from the two backends are
compared for equality before timing is reported.
"""

from __future__ import annotations

import argparse
import time

from signsym import _scan_py

try:
    from signsym import _scan_cy
except ImportError:
    _scan_cy = None


def best_of(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=6, help="largest signed rank to scan")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions, best is kept")
    args = parser.parse_args()

    if _scan_cy is None:
        print("compiled kernel not built; timing the pure-Python fallback only")

    rows = []
    for n in range(3, args.max_rank + 1):
        rows.append(("fmaj_pair_counts", n, _scan_py.fmaj_pair_counts,
                     None if _scan_cy is None else _scan_cy.fmaj_pair_counts))
    for n in (7, 8):
        rows.append(("maj_counts", n, _scan_py.maj_counts,
                     None if _scan_cy is None else _scan_cy.maj_counts))
        rows.append(("inv_counts", n, _scan_py.inv_counts,
                     None if _scan_cy is None else _scan_cy.inv_counts))

    header = f"{'kernel':<18} {'n':>3} {'python [s]':>12} {'cython [s]':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, n, py_fn, cy_fn in rows:
        py_time, py_result = best_of(py_fn, n, repeat=args.repeat)
        if cy_fn is None:
            print(f"{name:<18} {n:>3} {py_time:>12.4f} {'n/a':>12} {'n/a':>9}")
            continue
        cy_time, cy_result = best_of(cy_fn, n, repeat=args.repeat)
        if py_result != cy_result:
            print(f"{name:<18} {n:>3}  BACKEND MISMATCH")
            return 1
        print(f"{name:<18} {n:>3} {py_time:>12.4f} {cy_time:>12.4f} {py_time / cy_time:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
