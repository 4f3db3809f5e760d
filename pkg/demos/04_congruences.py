# Congruences for spt_2, spt_3, spt_4 and a tau congruence modulo 3^6.

from sptk.congruences import SPECS, check_congruence, s3, s4, tau_congruence_check, tau_rhs
from sptk.series import tau_series

for name, spec in SPECS.items():
    print(check_congruence(spec, 500).summary())

# s_3 is rational in general but both evaluations agree exactly.
print("s_3(1..6):", [str(s3(n)) for n in range(1, 7)])
print("s_4(1..6):", [str(s4(n)) for n in range(1, 7)])

t = tau_series(10)
for n in range(1, 6):
    print(f"tau({n}) = {t[n]:>8}   rhs mod 729 = {tau_rhs(n) % 729:>3}   tau mod 729 = {t[n] % 729:>3}")
print(tau_congruence_check(300).summary())
