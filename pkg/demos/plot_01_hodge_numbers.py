"""
Irregular Hodge numbers from hypergeometric parameters
======================================================

Each parameter set (alpha; beta) gets a theta value per alpha, and the
sorted thetas are the slopes of its Hodge polygon.
"""

from fractions import Fraction

from hypnp import normalize, theta, irregular_hodge_polygon, hodge_numbers, duality_pairing, conjugate

# %%
# The Kloosterman-type data alpha = (0, 1/2) splits evenly.
hp = normalize([0, Fraction(1, 2)])
print(hp, [str(t) for t in theta(hp)])

# %%
# Something less symmetric, with a lower parameter.
hp = normalize(["0", "1/6", "1/2", "2/3"], ["1/3", "5/6"])
poly = irregular_hodge_polygon(hp)
print("slopes  ", [str(s) for s in poly.slopes])
print("vertices", [(k, str(y)) for k, y in poly.vertices])
print("numbers ", {str(k): v for k, v in hodge_numbers(hp).items()})

# %%
# Non-resonant data are symmetric under theta -> (n+m-1) - theta once
# alpha and beta are replaced by their negatives.
print("duality holds:", duality_pairing(hp))
print("conjugate    :", conjugate(hp))

# %%
# Four zeros against the fifths: slopes 2, 3, 4, 5.
hp = normalize([0, 0, 0, 0], ["1/5", "2/5", "3/5", "4/5"])
print([str(s) for s in irregular_hodge_polygon(hp).slopes])
