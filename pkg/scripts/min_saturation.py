#!/usr/bin/env python3
"""Exact minimum size of a weakly saturated family at clique size 6.

Confirms that the star construction is optimal at desk scale: 19 at n=6
and 31 at n=7 (the latter scans all 324,632 thirty-edge families).
"""

import argparse
import time
from math import comb

from linesat.saturation import min_saturation_search


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    parser.add_argument("--budget", type=int, default=10**6)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    for n in args.n:
        start = time.perf_counter()
        m = min_saturation_search(n, 3, 6, args.budget, args.jobs)
        elapsed = time.perf_counter() - start
        star = 3 * comb(n - 2, 2) + 1 if n >= 5 else None
        print(f"n={n}: minimum={m} star_size={star} [{elapsed:.2f}s]")


if __name__ == "__main__":
    main()
