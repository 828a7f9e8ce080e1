"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--cases 200] [--repeat 5] [--seed 0]

Both backends run on identical precomputed tables; results are checked for
equality before timing.
"""

import argparse
import random
import sys
import timeit

from gpcheck import _kernels
from gpcheck.cyclic import _kernel_tables, enumerate_Dp
from gpcheck.generate import random_pair, random_virtual_string
from gpcheck.surface import build_ribbon


def _workloads(rng, cases):
    tables, passing, ribbons = [], [], []
    while len(tables) < cases or len(passing) < cases:
        p, P, _ = random_pair(rng, max_arrows=10, max_circles=4)
        T = _kernel_tables(p, P, enumerate_Dp(p, cap=400))
        if len(tables) < cases:
            tables.append(T)
        # scans that find nothing odd walk the whole family
        if len(passing) < cases and _kernels.vii_scan(T) is None:
            passing.append(T)
    for _ in range(cases):
        ribbons.append(build_ribbon(random_virtual_string(rng, 40, 6)).opp)
    return tables, passing, ribbons


def _time(fn, items, repeat):
    best = min(timeit.repeat(lambda: [fn(x) for x in items], number=1, repeat=repeat))
    return best / len(items)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    try:
        from gpcheck import _ckernels
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1

    tables, passing, ribbons = _workloads(random.Random(args.seed), args.cases)
    for label, name, items in (("vii_scan", "vii_scan", tables),
                               ("vii_scan full", "vii_scan", passing),
                               ("boundary_count", "boundary_count", ribbons)):
        fast, slow = getattr(_ckernels, name), getattr(_kernels, name)
        if any(fast(x) != slow(x) for x in items):
            print(f"{label}: backends disagree")
            return 1
        tc = _time(fast, items, args.repeat)
        tp = _time(slow, items, args.repeat)
        print(f"{label:15s} cython {tc * 1e6:10.1f} us  python {tp * 1e6:10.1f} us  speedup {tp / tc:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
