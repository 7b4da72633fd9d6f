"""f-vectors, maximal faces and GF(2) Betti numbers of the cut-minimal complex."""

import argparse
import time

from cutmin.cmcomplex import MAX_BETTI_N, summary

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n-max", type=int, default=6)
args = parser.parse_args()

for n in range(3, args.n_max + 1):
    t0 = time.perf_counter()
    s = summary(n, betti=n <= MAX_BETTI_N, maximal=True)
    print(f"n={n}  ({time.perf_counter() - t0:.2f}s)")
    print(f"  f-vector       {s.f_vector}")
    print(f"  maximal faces  {s.maximal_by_dim}")
    print(f"  euler char     {s.euler_characteristic}")
    if s.betti_gf2 is not None:
        print(f"  betti (GF(2))  {s.betti_gf2}")
