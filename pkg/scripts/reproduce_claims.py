#!/usr/bin/env python3
"""Print the rank-2 classification tables: ruled e, elliptic chi, K3 forms."""

import argparse

from zariski import (
    d1_scan,
    divisibility_criterion,
    elliptic_section_lattice,
    enumerate_k3_rank2,
    ruled_lattice,
    single_negative_denominator_bound,
)


def family_table(title, make, label, values, M):
    print(f"\n{title}")
    print(f"{label:>4} {'C^2':>5} {'bound':>6} {'max den':>8} {'witness':>10} {'d1':>6} {'C^2|C.f':>8}")
    for v in values:
        lat = make(v)
        rep = d1_scan(lat, M)
        div = divisibility_criterion(lat).holds
        print(
            f"{v:>4} {lat.gram[0][0]:>5} {single_negative_denominator_bound(lat):>6} "
            f"{rep.max_denominator:>8} {str(rep.witness):>10} {str(rep.d1_verdict):>6} {str(div):>8}"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=20, help="scan grid bound")
    ap.add_argument("--max-b", type=int, default=20)
    args = ap.parse_args()

    family_table("ruled surfaces: C0^2 = -e, C0.f = 1, f^2 = 0", ruled_lattice, "e", range(1, 11), args.max)
    family_table("elliptic fibrations with a section: C^2 = -chi", elliptic_section_lattice, "chi", range(1, 11), args.max)

    print(f"\nrank-2 K3 candidate forms [[a,b],[b,-2]], 0 < b <= {args.max_b}")
    print(f"{'a':>4} {'b':>4} {'det':>6} {'max den':>8}")
    for form in enumerate_k3_rank2(args.max_b):
        rep = d1_scan(form.lattice(), args.max)
        print(f"{form.a:>4} {form.b:>4} {-2 * form.a - form.b ** 2:>6} {rep.max_denominator:>8}")


if __name__ == "__main__":
    main()
