"""Compare the grid kernel backends on the default 201 x 101 sweep.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N] [--scalar]``.
``--scalar`` adds the per-cell route (reduced state -> correlation report),
which is the slowest and is kept as a baseline only.
"""

import argparse
import math
import timeit

import numpy as np

from relsteer import _kernels_py
from relsteer.sweep import point_report
from relsteer.unruh import UnruhScenario

try:
    from relsteer import _kernels
except ImportError:
    _kernels = None


def scalar_grid(alphas, betas):
    return [point_report(UnruhScenario(float(a), float(b))) for a in alphas for b in betas]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--na", type=int, default=201)
    ap.add_argument("--nb", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--scalar", action="store_true")
    args = ap.parse_args()

    alphas = np.linspace(0.0, math.pi / 2, args.na)
    betas = np.linspace(0.0, math.pi / 4, args.nb)
    cases = {"numpy": lambda: _kernels_py.grid_terms(alphas, betas)}
    if _kernels is not None:
        cases["cython"] = lambda: _kernels.grid_terms(alphas, betas)
        diff = np.max(np.abs(np.asarray(cases["cython"]()) - cases["numpy"]()))
        print(f"max |cython - numpy| = {diff:.3g}")
    else:
        print("compiled kernel not built; timing the numpy fallback only")
    if args.scalar:
        cases["scalar"] = lambda: scalar_grid(alphas, betas)

    cells = args.na * args.nb
    for name, fn in cases.items():
        number = 1 if name == "scalar" else 10
        best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
        print(f"{name:>7}: {best * 1e3:9.3f} ms per grid  ({best / cells * 1e9:8.1f} ns per cell)")


if __name__ == "__main__":
    main()
