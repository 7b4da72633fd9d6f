"""Print the table of bounds on h(n), with exact values where search reaches."""

import argparse

from cutmin.partitions import format_rational as fr
from cutmin.search import h_table

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("n_max", type=int, nargs="?", default=64)
parser.add_argument("--jobs", type=int, default=1)
args = parser.parse_args()

print(f"{'n':>4}  {'lower':>8}  {'upper':>10}  {'gap':>8}  source")
for row in h_table(args.n_max, jobs=args.jobs):
    gap = row.upper - row.lower
    print(f"{row.n:>4}  {fr(row.lower):>8}  {fr(row.upper):>10}  {fr(gap):>8}  {row.source}")
