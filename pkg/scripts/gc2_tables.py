#!/usr/bin/env python3
"""Small ordinary-graph-complex tables at fixed loop order.

Example:
    python scripts/gc2_tables.py --loop-order 3 --e-range 3..8
"""
import argparse

from ribboncoh.gc2 import gc_cohomology, gc_enumerate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--loop-order", type=int, default=3)
    ap.add_argument("--e-range", default="3..8")
    ap.add_argument("-d", type=int, default=0)
    ap.add_argument("--min-valence", type=int, default=3)
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.e_range.split(".."))

    for e in range(lo, hi + 1):
        nonzero, zero = gc_enumerate(args.loop_order, e, args.min_valence)
        print("E=%d: %d nonzero classes, %d zero by symmetry" % (e, len(nonzero), zero))
    print()
    rows = gc_cohomology(args.loop_order, args.d, (lo, hi), args.min_valence)
    print("%6s %5s %5s %5s  %s" % ("degree", "E", "dim", "h", "status"))
    for r in rows:
        print("%6d %5d %5d %5d  %s" % (r["degree"], r["edges"], r["dim"], r["h"], r["status"]))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
