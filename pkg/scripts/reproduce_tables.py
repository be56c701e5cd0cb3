#!/usr/bin/env python3
"""Reproduce all three bundled reference tables and print a summary.

Table I: degree-5 coefficient triples over GF(2^3).
Table II: trinomial classes for n <= 6 (n = 7 with --long, ~minutes).
Table III: quadrinomial family membership for n <= 6.
"""

import argparse
import os
import sys
import time

from gf2to1.field import make_field
from gf2to1.search import compare_with_table, search_degree5, search_sparse


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--long", action="store_true", help="include the n=7 searches")
    args = ap.parse_args()

    failures = 0

    def report(table, n, rep):
        nonlocal failures
        diff = compare_with_table(rep, table)
        status = "ok" if diff.ok else "MISMATCH"
        aligned = f" [{diff.aligned}]" if diff.aligned else ""
        print(
            f"table {table} n={n}: {len(rep.hits)} hits, "
            f"{rep.candidates_scanned} candidates, {rep.elapsed_ms} ms, {status}{aligned}"
        )
        for line in diff.missing:
            print(f"    missing: {line}")
        for line in diff.extra:
            print(f"    extra: {line}")
        failures += 0 if diff.ok else 1

    t0 = time.monotonic()
    report("I", 3, search_degree5(make_field(3), workers=args.workers))
    for n in range(3, 8 if args.long else 7):
        rep = search_sparse(
            make_field(n), "trinomial", dedupe="qm", long_run=args.long, workers=args.workers
        )
        report("II", n, rep)
    for n in range(3, 7):
        rep = search_sparse(make_field(n), "quadrinomial", dedupe="qm", workers=args.workers)
        report("III", n, rep)
    print(f"total: {time.monotonic() - t0:.1f}s, {failures} mismatching tables")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
