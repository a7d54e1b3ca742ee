"""
The Newton polytope and its weight function
===========================================

The Laurent polynomial behind an (n, m) sum lives on a polytope cut out
by a few facet inequalities.  Its weight function grades lattice points,
and the lattice points picked out by alpha recover theta.
"""

from hypnp import build_facets, weight, basis_exponents, volume, lattice_count_volume_check
from hypnp import normalize, theta
from hypnp.polytope import wan_facet_groups

fs = build_facets(2, 1, 2)
for h in fs.upper_facets:
    print("upper", h.coeffs, "<=", fs.d)
for h in fs.cone_facets:
    print("cone ", h.coeffs, ">= 0")
print("vertices", fs.vertices())

# %%
# Weights are piecewise linear and homogeneous.
for pt in [(0, 0), (1, 1), (2, 2), (0, 3)]:
    print(pt, weight(fs, pt))

# %%
# The exponents selected by alpha: one per alpha_k, weight top - theta_k.
hp = normalize(["0", "1/3", "2/3"], ["1/2"])
top = hp.n + hp.m - 1
for b in basis_exponents(hp):
    print(b.point, b.weight, top - b.weight)
print(sorted(theta(hp)))

# %%
# Volumes and a lattice-point cross-check.
for shape in [(2, 0, 1), (3, 0, 2), (3, 1, 1)]:
    print(shape, volume(*shape), lattice_count_volume_check(build_facets(*shape), 4))

# %%
# Each facet has all invariant factors equal to p - 1.
print(wan_facet_groups(3, 1, 5))
