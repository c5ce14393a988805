"""Find a strictly interior tuple for each inequality system.

A strictly interior point violates no inequality and satisfies every one
strictly; its existence shows the system is full-dimensional and that none
of the inequalities is an implicit equality.
"""

from __future__ import annotations

import argparse
import sys

from kleinhorn.cone import inequality_system, interior_point
from kleinhorn.partitions import format_partition


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", default="1,3;2,3;1,5;2,5",
                        help="semicolon-separated n,m pairs")
    parser.add_argument("--max-part", type=int, default=8)
    args = parser.parse_args()

    for chunk in args.pairs.split(";"):
        n, m = map(int, chunk.split(","))
        point = interior_point(n, m, max_part=args.max_part)
        system = inequality_system(n, m)
        margins = [iq.value(point) for iq in system.inequalities]
        assert all(v < 0 for v in margins)
        rows = " ; ".join(format_partition(row) or "0" for row in point)
        print(f"n={n} m={m}: [{rows}]  (max margin {max(margins)}, "
              f"{len(system.inequalities)} inequalities)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
