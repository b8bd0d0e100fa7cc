#!/usr/bin/env python3
"""Exhaustive verification of the saturation size bound across small n.

For each n, every hypergraph with C(n,3) - n + 5 triples must be weakly
saturated at clique size 6, while one fewer edge admits a failure.  The
enumeration count explodes quickly; n=8 already needs C(56,4) checks of the
failing size, so the default stops at 7.
"""

import argparse
import time
from math import comb

from linesat.saturation import exhaustive_size_check


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--budget", type=int, default=10**6)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    for n in range(6, args.n_max + 1):
        bound = comb(n, 3) - n + 5
        start = time.perf_counter()
        at_bound = exhaustive_size_check(n, 3, 6, bound, args.budget, args.jobs)
        below = exhaustive_size_check(n, 3, 6, bound - 1, args.budget, args.jobs)
        elapsed = time.perf_counter() - start
        tight = at_bound is None and below is not None
        print(
            f"n={n}: bound={bound} "
            f"({comb(comb(n, 3), comb(n, 3) - bound)} sets at the bound) "
            f"tight={tight} [{elapsed:.2f}s]"
        )
        if below is not None:
            print(f"  failing {bound - 1}-edge set: {below.edge_list()}")


if __name__ == "__main__":
    main()
