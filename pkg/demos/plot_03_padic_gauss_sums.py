"""
Gauss sums in a totally ramified extension
==========================================

Sums are evaluated in Z_q[pi] with pi^(p-1) = -p, which contains both
the p-th roots of unity and the Teichmueller lifts of F_q.  Valuations of
Gauss sums then follow the digit-sum rule.
"""

from hypnp import default_ring, gauss_sum

ring = default_ring(7, 1, 30)
zeta = ring.zeta_p
print("zeta^7 == 1:", zeta**7 == 1, " ord(zeta - 1) =", (zeta - 1).ord_q())

# %%
# omega(3) is the (p-1)-th root of unity congruent to 3.
w = ring.teichmuller(3)
print("omega(3)^6 == 1:", w**6 == 1)

# %%
# G(psi, omega^-k) has ord_q equal to k/(p-1).
for k in range(6):
    print(k, gauss_sum(ring, k).ord_q())

# %%
# Over F_25 the valuation is the base-5 digit sum over 2(p-1).
ring = default_ring(5, 2, 24)
for k in (1, 5, 6, 13, 23):
    print(k, gauss_sum(ring, k).ord_q())
