#!/usr/bin/env python3
"""Generate the full set of count tables for a degree range.

Writes the rational-count cache in the versioned table format and prints
triple-point, genus-2, and breakdown tables to stdout.  Handy for eyeballing
growth rates or exporting everything at once:

    python scripts/make_tables.py 12 --cache nd.txt
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from curvecounts import (  # noqa: E402
    genus2_breakdown,
    rational_counts,
    save_table,
    triple_point_curve_count,
)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("d_max", type=int)
    parser.add_argument("--cache", type=Path, default=None,
                        help="also write the rational table here")
    args = parser.parse_args(argv)
    if args.d_max < 4:
        parser.error("d_max must be >= 4 so every table is nonempty")

    start = time.perf_counter()
    counts = rational_counts(args.d_max)
    build = time.perf_counter() - start
    if args.cache is not None:
        save_table(counts, args.cache)

    print(f"# rational counts up to d={args.d_max} built in {build:.3f}s")
    print("d  N_d  triple-point  genus-2  (case-i, case-ii)")
    for d in range(1, args.d_max + 1):
        row = [str(d), str(counts[d])]
        row.append(str(triple_point_curve_count(d, counts)) if d >= 3 else "-")
        if d >= 4:
            b = genus2_breakdown(d, counts)
            row.append(str(b.total))
            row.append(f"({b.case_i}, {b.case_ii})")
        else:
            row.extend(["-", "-"])
        print("  ".join(row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
