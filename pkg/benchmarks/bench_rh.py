#!/usr/bin/env python3
"""Timing comparison: compiled vs pure-Python Farey-scan kernels.

Runs the full W(Q) accumulation with each kernel over the same odd-q range
and reports wall time, speedup, and the (bitwise) agreement of the results.

    python3 benchmarks/bench_rh.py --qmax 2000 --repeat 3
"""

import argparse
import time

from trigsum.rh import KERNEL_NAME, _chi_sine_block_py

try:
    from trigsum._fareyscan import chi_sine_block as _native
except ImportError:
    _native = None


def run(kernel, qmax):
    t0 = time.perf_counter()
    acc = 0.0
    for q in range(3, qmax + 1, 2):
        acc += kernel(q)
    return time.perf_counter() - t0, acc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qmax", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"active kernel at import: {KERNEL_NAME}")
    kernels = [("python", _chi_sine_block_py)]
    if _native is not None:
        kernels.append(("compiled", _native))
    else:
        print("compiled extension not available; timing the mirror only")

    results = {}
    for name, kernel in kernels:
        best, value = min(run(kernel, args.qmax) for _ in range(args.repeat))
        results[name] = (best, value)
        print(f"{name:>9}: {best * 1e3:10.2f} ms   W({args.qmax}) = {value!r}")

    if len(results) == 2:
        py_t, py_v = results["python"]
        cy_t, cy_v = results["compiled"]
        print(f"  speedup: {py_t / cy_t:.1f}x")
        print(f"  bitwise agreement: {py_v == cy_v}")


if __name__ == "__main__":
    main()
