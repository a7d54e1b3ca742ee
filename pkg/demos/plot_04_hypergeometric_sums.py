"""
Hypergeometric sums, exactly
============================

Every summand is a p-th root of unity times a (q-1)-th root of unity, so
each sum is an integer vector over those pairs.  One convolution pass
computes the vectors for every fiber at once.
"""

import numpy as np

from hypnp import CharParams, hyp_sum, hyp_sum_bruteforce
from hypnp.charsum import fiber_counts

cp = CharParams(5, 1, (0, 0))  # Kloosterman
for a in range(1, 5):
    v = hyp_sum(cp, a)
    print(a, np.round(v.complex_value(), 6), "ord_q", v.ord_q())

# %%
# The group-ring form at a = 1: 2 + zeta^2 + zeta^3.
print(np.argwhere(hyp_sum(cp, 1).counts))

# %%
# The fast kernel and term-by-term enumeration agree in W.
cp = CharParams(7, 1, (0, 2, 4), (1,))
print(all(hyp_sum(cp, a).padic == hyp_sum_bruteforce(cp, a) for a in range(1, 7)))
print("counts array", fiber_counts(cp).shape)

# %%
# Sums over F_{q^2} use the norm back to F_q.
print(hyp_sum(cp, 3, ext=2).ord_q())
