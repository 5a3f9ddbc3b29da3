"""Compare the coset-enumeration kernels on growing toroid cells.

Runs the pure-Python kernel and, when built, the compiled one on the
same presentations, checks the tables agree, and prints the timings.

    python3 benchmarks/bench_toddcox.py            # quick cells
    python3 benchmarks/bench_toddcox.py --full     # adds larger cells
"""

import argparse
import time

import numpy as np

from hyperforge import toroids
from hyperforge.toddcox import todd_coxeter, backend_name

QUICK_CELLS = [(3, 2, 2), (3, 1, 3), (3, 3, 2), (3, 1, 4), (3, 3, 3)]
FULL_CELLS = QUICK_CELLS + [(4, 2, 2), (4, 1, 3)]


def run(cells):
    backends = ["pure"]
    if backend_name() == "compiled":
        backends.append("compiled")
    header = "%-12s %10s" % ("cell", "cosets")
    for b in backends:
        header += " %12s" % (b + " [s]")
    if len(backends) == 2:
        header += " %9s" % "speedup"
    print(header)
    print("-" * len(header))
    for (n, k, s) in cells:
        pres = toroids.cubic_toroid_presentation(toroids.ToroidParams(n, k, s))
        times = []
        tables = []
        for b in backends:
            t0 = time.perf_counter()
            t = todd_coxeter(pres, backend=b)
            times.append(time.perf_counter() - t0)
            tables.append(t.table)
        if len(tables) == 2:
            assert np.array_equal(tables[0], tables[1]), "kernels disagree"
        row = "%-12s %10d" % ("(%d,%d,%d)" % (n, k, s), tables[0].shape[0])
        for dt in times:
            row += " %12.3f" % dt
        if len(times) == 2:
            row += " %8.1fx" % (times[0] / max(times[1], 1e-9))
        print(row)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--full", action="store_true",
                    help="include the larger rank-5 cells")
    args = ap.parse_args()
    run(FULL_CELLS if args.full else QUICK_CELLS)


if __name__ == "__main__":
    main()
