"""List every Cheeger graph for 3 <= n <= 8 with its structural flags."""

import argparse
import time

from cutmin.graphs import format_graph
from cutmin.partitions import format_partition, format_rational
from cutmin.search import cheeger_number

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n-max", type=int, default=8)
parser.add_argument("--jobs", type=int, default=1)
parser.add_argument("--edges", action="store_true", help="also print edge lists")
args = parser.parse_args()

for n in range(3, args.n_max + 1):
    t0 = time.perf_counter()
    rep = cheeger_number(n, args.jobs)
    dt = time.perf_counter() - t0
    print(f"n={n}  h={format_rational(rep.h_value)}  classes={rep.classes_visited}  ({dt:.2f}s)")
    for g, f in zip(rep.cheeger_graphs, rep.flags):
        shape = format_partition(f.staircase) if f.staircase else "-"
        print(
            f"  {f.canonical}  |E|={f.edges}  triangle_free={f.triangle_free}"
            f"  bipartite={f.bipartite}  staircase={shape}"
        )
        if args.edges:
            print("    " + format_graph(g).replace("\n", " ").strip())
