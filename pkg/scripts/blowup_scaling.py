"""Scan partitions for failures of exact N_d scaling under blowup.

N_d(c lam) = c d + ceil(2 c |lam| / d) while c N_d(lam) = c d + c ceil(2 |lam| / d),
so the two agree only when the ceiling commutes with multiplication by c.
For each failure where N = N_d, the blown-up staircase is confirmed cut-minimal
at the smaller vertex count directly on the graph.
"""

import argparse

from cutmin import partitions as P
from cutmin.graphs import is_cut_minimal, staircase

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-weight", type=int, default=12)
parser.add_argument("--max-c", type=int, default=4)
args = parser.parse_args()

total = nd_fail = n_fail = 0
for lam in P.partitions_up_to(args.max_weight):
    for c in range(2, args.max_c + 1):
        total += 1
        big = P.blowup(lam, c)
        if P.n_d(big) != c * P.n_d(lam):
            nd_fail += 1
        if P.n_min(lam) == P.n_d(lam) and P.n_min(big) < c * P.n_min(lam):
            n_fail += 1
            m = P.n_min(big)
            confirmed = m <= 64 and is_cut_minimal(staircase(m, big))
            print(
                f"lam={P.format_partition(lam)} c={c}: N(lam)={P.n_min(lam)} N(c lam)={m}"
                f" h ratio {P.format_rational(P.h_partition(big) / P.h_partition(lam))}"
                f" graph check={'ok' if confirmed else 'skipped'}"
            )
print(f"{total} pairs; N_d not exact in {nd_fail}; N not exact despite N = N_d in {n_fail}")
