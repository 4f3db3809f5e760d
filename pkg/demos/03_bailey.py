# Two Bailey pairs and the chain sums they generate.

from sptk import CRANK_PAIR, RANK_PAIR, a_k_series, symmetrized_crank_series
from sptk.series import qpochhammer_infinite, series_inv
from sptk.spt import bailey_verify, mainthm_check

for pair in (CRANK_PAIR, RANK_PAIR):
    print(bailey_verify(pair, 12, 40).summary())
    for k in (1, 2, 3):
        print("  ", mainthm_check(pair, k, 30).summary())

# A_1 is the divisor sum generating function.
print("A_1:", a_k_series(1, 12).coeffs[1:])

# A_2 / (q;q)_oo counts the symmetrized crank moment mu_4.
lhs = a_k_series(2, 15) * series_inv(qpochhammer_infinite(1, 15))
print("A_2/(q)_oo:", lhs.coeffs)
print("mu_4 gf:   ", symmetrized_crank_series(2, 15).coeffs)
