#!/usr/bin/env python3
"""Reproduce the headline cohomology tables.

Runs, in order of increasing cost:
  * the low-valence (paths and polygons) tables at genus 0,
  * the trivalent-plus (1,1) table,
  * the genus-0 combined-differential table (acyclic in every certified degree),
  * the genus-1 combined-differential table with the expected-dimension offsets.

The genus-0 table at --e-max 8 takes a few minutes; pass a smaller bound
for a quick look.  Results are cached under --cache-dir when given.
"""
import argparse
import time

from ribboncoh.cache import Cache
from ribboncoh.complexes import (
    ComplexSpec,
    build,
    calc1_offsets,
    cohomology,
    euler,
    render_table,
)


def run(title, spec, cache, show_offsets=False):
    t0 = time.time()
    sl = build(spec, cache=cache)
    rows = cohomology(sl)
    print("== %s  [%s]  %.1fs" % (title, spec.content_key(), time.time() - t0))
    print(render_table(rows))
    print("euler: %s" % euler(sl))
    if show_offsets:
        print("expected-dimension offsets: %s" % calc1_offsets(rows, spec.d))
    print()


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e-max", type=int, default=8, help="edge bound for the genus-0 table")
    ap.add_argument("--e-max-g1", type=int, default=7, help="edge bound for the genus-1 table")
    ap.add_argument("--cache-dir", default=None)
    args = ap.parse_args()
    cache = Cache(args.cache_dir)

    run("paths", ComplexSpec("kp", 0, 0, "le2", 1, 10, boundaries=1), cache)
    run("polygons (loop classes)", ComplexSpec("kp", 0, 0, "le2", 1, 10, boundaries=2), cache)
    run("(1,1) trivalent-plus", ComplexSpec("kp", 1, 0, "ge3", 2, 4, boundaries=1), cache)
    run("genus 0, combined differential",
        ComplexSpec("mw", 0, 0, "ge3", 1, args.e_max), cache)
    run("genus 1, combined differential",
        ComplexSpec("mw", 1, 0, "ge3", 2, args.e_max_g1), cache, show_offsets=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
