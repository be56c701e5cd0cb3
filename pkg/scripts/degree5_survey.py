#!/usr/bin/env python3
"""Survey of 2-to-1 normalized quintics x^5 + a3 x^3 + a2 x^2 + a1 x.

Runs the exhaustive degree-5 search for each requested n and writes one JSON
report per field to the output directory.  Only n = 3 has bundled reference
data; the larger fields produce new data (empty in every run so far for
n = 4, 5, 6, consistent with the nonexistence proof that kicks in above
n = 9).
"""

import argparse
import os
import pathlib
import sys

from gf2to1.field import make_field
from gf2to1.search import report_to_json, search_degree5
from gf2to1.two2one import is_two_to_one


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("degree5_reports"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for n in args.n:
        rep = search_degree5(make_field(n), workers=args.workers)
        bad = [h.poly for h in rep.hits if not is_two_to_one(h.poly)]
        if bad:
            print(f"n={n}: {len(bad)} hits FAILED re-verification", file=sys.stderr)
            return 1
        path = args.out / f"degree5_n{n}.json"
        path.write_text(report_to_json(rep))
        print(
            f"n={n}: {len(rep.hits)} hits / {rep.candidates_scanned} candidates "
            f"in {rep.elapsed_ms} ms -> {path}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
