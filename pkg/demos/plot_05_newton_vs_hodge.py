"""
Newton polygons against Hodge polygons
======================================

The power sums over F_{q^j} give the Frobenius traces, Newton's
identities give the characteristic polynomial, and its Newton polygon is
compared to the Hodge polygon fiber by fiber.
"""

from hypnp import CharParams, compare, compare_all

for r in compare_all(CharParams(5, 1, (0, 0))):
    print(r.point, r.verdict, [str(o) for o in r.charpoly_ords])

# %%
# A rank-three family at p = 7 with one lower character.
cp = CharParams(7, 1, (0, 2, 4), (1,))
r = compare(cp, 3)
print(r.verdict, [str(s) for s in r.newton_polygon.slopes], [str(s) for s in r.hodge_polygon.slopes])

# %%
# The full report is plain JSON.
print(sorted(r.to_json()))
