# Rank and crank tables, their moments, and the S* conversion.

from sptk import ordinary_from_symmetrized, ordinary_moment, stat_table, stirling_star, symmetrized_moment
from sptk.moments import g_eval, moment_vector

crank = stat_table("crank", 10)
rank = stat_table("rank", 10)

print("crank counts for n=4:", [(m, c) for m, c in crank.row(4) if c])
print("rank counts for n=4: ", [(m, c) for m, c in rank.row(4) if c])
print("n=1 crank row uses the convention:", crank.row(1))

print("M_4(4) =", ordinary_moment(crank, 4, 4), " N_4(4) =", ordinary_moment(rank, 4, 4))
print("mu_4(4) =", symmetrized_moment(crank, 4, 4), " eta_4(4) =", symmetrized_moment(rank, 4, 4))

tri = stirling_star(6)
for row in tri.rows:
    print("  ", *row)

# x^(2n) expands in g_k(x) = x^2 (x^2 - 1) ... (x^2 - (k-1)^2)
x = 7
print("7^12 =", 7**12, "=", sum(tri(6, k) * g_eval(k, x) for k in range(1, 7)))

print("M_6(9) rebuilt from mu_2, mu_4, mu_6:", ordinary_from_symmetrized(crank, 3, 9))
print("M_6(9) summed directly:               ", ordinary_moment(crank, 6, 9))

# Generating functions take the moments well past enumeration range.
m2, n2 = moment_vector("crank", 1, 300), moment_vector("rank", 1, 300)
print("M_2(300) - N_2(300) =", m2[300] - n2[300])
