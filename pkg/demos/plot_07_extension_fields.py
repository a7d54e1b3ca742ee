"""
Exploring q = p^s
=================

For s > 1 the Frobenius-side Hodge polygon averages theta over the
orbit of alpha under multiplication by p.  Characters that do not factor
through the norm to F_p can sit strictly above it.  These verdicts are
descriptive only.
"""

from hypnp import CharParams, compare, normalize
from hypnp.hodge import as_hodge_polygon, orbit_theta_multisets

hp = normalize(["0", "1/8"])
print([[str(t) for t in row] for row in orbit_theta_multisets(hp, 3, 2)])
print([str(s) for s in as_hodge_polygon(hp, 3, 2).slopes])

# %%
for aexps in [(0, 2), (0, 4)]:
    r = compare(CharParams(3, 2, aexps), 1)
    print(aexps, r.verdict, "experimental" if r.hodge_experimental else "",
          [str(s) for s in r.newton_polygon.slopes])
