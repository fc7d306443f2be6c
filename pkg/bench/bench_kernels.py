"""Time the compiled and numpy kernels on the workloads the package runs.

    python bench/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from inellipse import kernels
from inellipse.besant import generate_besant_quad

EX = (2.0, 4.0, 6.8, -2.4)


def workloads(mod, quads):
    grid = np.linspace(0.0, 1.0, 10003)[1:-1]
    grid_small = np.linspace(0.0, 1.0, 2003)[1:-1]
    return {
        "family_foci, 10001-point grid": lambda: mod.family_foci(*EX, grid),
        "family_foci, 2001 points x 100 quads": lambda: [mod.family_foci(*q, grid_small) for q in quads],
        "family_area, 10001-point grid": lambda: mod.family_area(*EX, grid),
        "max_area_r x 100 quads": lambda: [mod.max_area_r(*q, 1e-12, 1e-12) for q in quads],
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    quads = []
    while len(quads) < 100:
        s, t = rng.uniform(0.2, 4.0, 2)
        try:
            cq = generate_besant_quad(s, t)
        except ValueError:
            continue
        quads.append((cq.s, cq.t, cq.v, cq.w))

    backends = kernels.available_backends()
    print(f"backends: {', '.join(sorted(backends))} (selected: {kernels.BACKEND})")
    results = {}
    for name, mod in sorted(backends.items()):
        for label, fn in workloads(mod, quads).items():
            fn()
            best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            results[(label, name)] = best
    labels = list(workloads(backends["python"], quads))
    width = max(map(len, labels))
    header = f"{'workload':<{width}}  " + "  ".join(f"{n:>10}" for n in sorted(backends))
    if "cython" in backends:
        header += "   speedup"
    print(header)
    for label in labels:
        row = f"{label:<{width}}  " + "  ".join(f"{results[(label, n)] * 1e3:8.2f}ms" for n in sorted(backends))
        if "cython" in backends:
            row += f"   {results[(label, 'python')] / results[(label, 'cython')]:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
