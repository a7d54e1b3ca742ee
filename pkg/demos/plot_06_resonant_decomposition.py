"""
Resonant parameters
===================

When a character appears both upstairs and downstairs the sum splits
into q times a smaller sum plus a product of Gauss sums.  The sign in
front of that product is the product of the lower characters at the
norm of -1.
"""

from hypnp import CharParams, compare
from hypnp.charsum import resonant_decomposition_check, resonant_decomposition_terms

cp = CharParams(5, 1, (0, 0, 0), (0, 0))
terms = resonant_decomposition_terms(cp, 2)
print("sign", terms["sign"])
print("character sign :", resonant_decomposition_check(cp, 2))
print("(-1)^(m-1) sign:", resonant_decomposition_check(cp, 2, convention="literal"))

# %%
# The Newton polygon of resonant data: 1 + the reduced slopes, plus the
# valuation of the Gauss-sum product.
r = compare(CharParams(5, 1, (0, 1, 3), (3,)), 1)
print(r.route, r.detail)
print([str(s) for s in r.newton_polygon.slopes], [str(s) for s in r.hodge_polygon.slopes])
