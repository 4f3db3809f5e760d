# spt_k(n) three ways: weighted partitions, moment differences, chain sums.

from sptk import Partition, spt_combinatorial, spt_from_moments, spt_series, weight
from sptk.spt import compositions

# Each composition of k places weights on the partition's parts.
print("compositions of 3:", list(compositions(3)))

pi = Partition.from_parts([2, 1, 1])
print(f"omega_2({pi}) =", weight(2, pi))

# Route 1: sum of omega_k over all partitions of n.
print("spt_2(4) by weights:", spt_combinatorial(2, 4))

# Route 2: symmetrized crank moment minus symmetrized rank moment.
print("spt_2(4) by moments:", spt_from_moments(2, 4)[4])

# Route 3: coefficients of a single q-series, cheap even for large n.
s = spt_series(2, 200)
print("spt_2(4) by series: ", s[4])
print("spt_2(200) =", s[200])

print()
print(" n " + "".join(f"{'k=' + str(k):>14}" for k in range(1, 7)))
cols = [spt_series(k, 12) for k in range(1, 7)]
for n in range(1, 13):
    print(f"{n:2d} " + "".join(f"{c[n]:14d}" for c in cols))
