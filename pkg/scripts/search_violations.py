#!/usr/bin/env python3
"""Longer randomized search for complex transpose-minor violations.

The real accretive inequality is a theorem; its naive complex analogue with
(A + A*)/2 >= 0 and transpose-based minors is not.  This script samples and
hill-climbs on the margin and reports what it finds, including how quickly
violations appear per dimension.
"""

import argparse
import sys

from minorcert.numaccretive import search_complex_violation


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--iters", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=123456789)
    args = ap.parse_args()
    for dim in args.dims:
        witnesses = search_complex_violation(dim, args.iters, args.seed)
        print(f"dim {dim}: {len(witnesses)} violating instances in {args.iters} iters")
        for w in witnesses[:3]:
            print(
                f"  {w.label}: lhs={w.lhs:.4f} rhs={w.rhs:.4f} margin={w.margin:.4f}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
