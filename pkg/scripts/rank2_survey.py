#!/usr/bin/env python3
"""Survey rank-2 lattices [[-p, q], [q, r]]: scan maximum vs closed-form bound vs divisibility.

Writes one CSV row per lattice to stdout.
"""

import argparse
import csv
import itertools
import sys

from zariski import SurfaceLattice, d1_scan, divisibility_criterion, hodge_index_check, single_negative_denominator_bound
from zariski.engine import PreconditionError


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=6)
    ap.add_argument("--q-max", type=int, default=6)
    ap.add_argument("--r", type=int, nargs="+", default=[-2, 0, 2])
    ap.add_argument("--max", type=int, default=30)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["p", "q", "r", "det", "hodge", "max_den", "witness", "bound", "divisibility", "agree"])
    for p, q, r in itertools.product(range(1, args.p_max + 1), range(args.q_max + 1), args.r):
        lat = SurfaceLattice(((-p, q), (q, r)))
        h = hodge_index_check(lat)
        if not h.passes:
            continue
        rep = d1_scan(lat, args.max, workers=args.workers)
        try:
            bound = single_negative_denominator_bound(lat)
        except PreconditionError:
            bound = ""
        div = divisibility_criterion(lat).holds
        witness = " ".join(map(str, rep.witness))
        out.writerow([p, q, r, h.det, h.passes, rep.max_denominator, witness, bound, div, div == rep.d1_verdict])


if __name__ == "__main__":
    main()
