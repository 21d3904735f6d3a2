#!/usr/bin/env python3
"""Explore whether negative definite curve sets on lattices with integral
decompositions have determinant (-1)^k.

Draws random lattices, keeps those whose d1 scan is integral, and tallies
determinants over all negative definite subsets of size >= 2.
"""

import argparse
import collections
import itertools
import random

from zariski import SurfaceLattice, d1_scan, determinant_question_check, hodge_index_check, is_negative_definite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--max", type=int, default=4, help="scan grid bound")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = collections.Counter()
    kept = 0
    for _ in range(args.samples):
        n = args.rank
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = rng.choice([-4, -3, -2, -1, 0, 1])
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = rng.randint(0, 3)
        lat = SurfaceLattice(g)
        if not hodge_index_check(lat).passes or not d1_scan(lat, args.max).d1_verdict:
            continue
        kept += 1
        for k in range(2, n + 1):
            for subset in itertools.combinations(range(n), k):
                if all(g[i][i] < 0 for i in subset) and is_negative_definite(lat, subset):
                    det, equal = determinant_question_check(lat, subset)
                    tally[(k, det, equal)] += 1
    print(f"{kept} hyperbolic lattices with integral scans out of {args.samples}")
    for (k, det, equal), count in sorted(tally.items()):
        print(f"k={k} det={det:>4} equals (-1)^k: {equal!s:>5}  x{count}")


if __name__ == "__main__":
    main()
