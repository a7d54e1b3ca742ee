"""Newton polytope of the Laurent polynomial

    f_a = sum_{i>=2} x_i^d - sum_j y_j^d + a * prod_j y_j^d / prod_{i>=2} x_i^d

in the coordinates (u_2, ..., u_n, v_1, ..., v_m) of Z^{n+m-1}.  The facet
inequalities are the closed forms for the three shapes n > m = 0,
n > m > 0 and n = m; nothing here runs a generic convex-hull routine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    GeometryError,
    InvalidShapeError,
    NotInConeError,
    PreconditionError,
    ResourceError,
)
from .params import HypParams, is_nonresonant
from .snf import invariant_factors

LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    label: str
    coeffs: tuple[int, ...]

    def __call__(self, point: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, point))


@dataclass(frozen=True)
class FacetSystem:
    """Delta(f_a) = {cone facets >= 0} intersected with {upper facets <= d}."""

    n: int
    m: int
    d: int
    upper_facets: tuple[Facet, ...]
    cone_facets: tuple[Facet, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.n + self.m - 1

    def in_cone(self, point: Sequence[int]) -> bool:
        return all(h(point) >= 0 for h in self.cone_facets)

    def contains(self, point: Sequence[int], scale=1) -> bool:
        return self.in_cone(point) and all(h(point) <= scale * self.d for h in self.upper_facets)

    def vertices(self) -> dict[str, LatticePoint]:
        """Nonzero vertices P_i (x_i^d), Q_j (y_j^d) and R (the z-monomial)."""
        n, m, d, dim = self.n, self.m, self.d, self.dim
        out = {}
        for i in range(2, n + 1):
            v = [0] * dim
            v[i - 2] = d
            out[f"P{i}"] = tuple(v)
        for j in range(1, m + 1):
            v = [0] * dim
            v[n - 2 + j] = d
            out[f"Q{j}"] = tuple(v)
        out["R"] = tuple([-d] * (n - 1) + [d] * m)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "upper_facets": [{"label": h.label, "coeffs": list(h.coeffs), "bound": self.d}
                             for h in self.upper_facets],
            "cone_facets": [{"label": h.label, "coeffs": list(h.coeffs)} for h in self.cone_facets],
        }


def build_facets(n: int, m: int, d: int) -> FacetSystem:
    if n < 1 or m < 0 or n < m:
        raise InvalidShapeError(f"need n >= m >= 0 and n >= 1, got (n, m) = ({n}, {m})")
    if n + m - 1 <= 0:
        raise InvalidShapeError("ambient dimension n + m - 1 must be positive")
    if d < 1:
        raise InvalidShapeError("d must be at least 1")
    dim = n + m - 1
    nu = n - 1  # number of u coordinates

    total = Facet(f"h{n + 1}", tuple([1] * dim))
    upper = [total]
    if n > m:
        for i0 in range(2, n + 1):
            c = [1] * dim
            c[i0 - 2] -= n - m
            upper.append(Facet(f"h{i0}", tuple(c)))
    cone = []
    if m:
        for i in range(2, n + 1):
            for j in range(1, m + 1):
                c = [0] * dim
                c[i - 2] = 1
                c[nu + j - 1] = 1
                cone.append(Facet(f"u{i}+v{j}", tuple(c)))
        for j in range(1, m + 1):
            c = [0] * dim
            c[nu + j - 1] = 1
            cone.append(Facet(f"v{j}", tuple(c)))
    return FacetSystem(n, m, d, tuple(upper), tuple(cone))


def weight(fs: FacetSystem, point: Sequence[int]) -> Fraction:
    """Smallest w >= 0 with ``point`` in w * Delta."""
    point = tuple(point)
    if len(point) != fs.dim:
        raise InvalidShapeError(f"point has {len(point)} coordinates, expected {fs.dim}")
    if not fs.in_cone(point):
        raise NotInConeError(f"{point} lies outside the cone over Delta")
    best = max(h(point) for h in fs.upper_facets)
    return max(Fraction(best, fs.d), Fraction(0))


@dataclass(frozen=True)
class BasisExponent:
    r: int
    ell: int
    point: LatticePoint
    weight: Fraction

    def to_json(self) -> dict:
        w = self.weight
        return {"r": self.r, "ell": self.ell, "point": list(self.point),
                "weight": f"{w.numerator}/{w.denominator}"}


def split_points(hp: HypParams) -> list[int]:
    """The integers s_0 = 1, s_r = #{i : alpha_i < beta_r}, s_{m+1} = n + 1."""
    s = [1]
    for b in hp.beta:
        s.append(sum(1 for a in hp.alpha if a < b))
    s.append(hp.n + 1)
    return s


def basis_exponents(hp: HypParams, d: int | None = None) -> list[BasisExponent]:
    """Exponents of the monomial basis g_{r,l} of the isotypic cohomology.

    Requires alpha_1 = 0, non-resonant parameters and ``d`` a common
    denominator.  Returns n exponents ordered by (r, l).
    """
    if hp.alpha[0] != 0:
        raise PreconditionError("basis exponents need alpha_1 = 0")
    if not is_nonresonant(hp):
        raise PreconditionError("basis exponents need non-resonant parameters")
    if d is None:
        d = hp.common_denominator()
    if any(d % x.denominator for x in hp.alpha + hp.beta):
        raise PreconditionError(f"d = {d} is not a common denominator")
    n, m = hp.n, hp.m
    if n + m - 1 < 1:
        raise InvalidShapeError("ambient dimension n + m - 1 must be positive")
    a = [int(x * d) for x in hp.alpha]  # a[0] is a_1
    b = [int(x * d) for x in hp.beta]
    s = split_points(hp)
    fs = build_facets(n, m, d)
    out = []
    for r in range(m + 1):
        for ell in range(1, s[r + 1] - s[r] + 1):
            cut = s[r] + ell
            u = [a[i - 1] if i < cut else a[i - 1] - d for i in range(2, n + 1)]
            v = [d - b[j - 1] if j <= r else 2 * d - b[j - 1] for j in range(1, m + 1)]
            pt = tuple(u + v)
            out.append(BasisExponent(r, ell, pt, weight(fs, pt)))
    return out


def basis_theta_index(hp: HypParams) -> list[int]:
    """Theta index s_r + l for each basis exponent, folded so that n+1 -> 1."""
    s = split_points(hp)
    idx = []
    for r in range(hp.m + 1):
        for ell in range(1, s[r + 1] - s[r] + 1):
            k = s[r] + ell
            idx.append(1 if k == hp.n + 1 else k)
    return idx


def volume(n: int, m: int, d: int) -> Fraction:
    dim = n + m - 1
    if dim < 1:
        raise InvalidShapeError("ambient dimension n + m - 1 must be positive")
    return Fraction(d**dim * n, math.factorial(dim))


def count_lattice_points(fs: FacetSystem, scale: int, budget: int = 5_000_000) -> int:
    """Number of lattice points in ``scale * Delta``."""
    dim = fs.dim
    r = scale * fs.d  # every vertex lies in the box [-d, d]^dim
    side = 2 * r + 1
    if side**dim > budget:
        raise ResourceError(f"{side}^{dim} grid points exceed the budget {budget}")
    axis = np.arange(-r, r + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axis] * dim), indexing="ij"), axis=-1).reshape(-1, dim)
    ok = np.ones(len(grid), dtype=bool)
    for h in fs.cone_facets:
        ok &= grid @ np.array(h.coeffs, dtype=np.int64) >= 0
    for h in fs.upper_facets:
        ok &= grid @ np.array(h.coeffs, dtype=np.int64) <= r
    return int(ok.sum())


def lattice_count_volume_check(fs: FacetSystem, scale_max: int, budget: int = 5_000_000) -> Fraction:
    """Leading Ehrhart coefficient of Delta, estimated from lattice counts.

    Counts points of k * Delta for k = 1..scale_max, interpolates the
    degree-dim polynomial through k = 0..dim (L(0) = 1) and checks it
    against every remaining count before returning its top coefficient.
    """
    dim = fs.dim
    if scale_max < dim:
        raise ValueError(f"scale_max must be at least dim = {dim}")
    counts = [1] + [count_lattice_points(fs, k, budget) for k in range(1, scale_max + 1)]
    # Newton forward differences on k = 0..dim
    diffs = [counts[: dim + 1]]
    for _ in range(dim):
        prev = diffs[-1]
        diffs.append([y - x for x, y in zip(prev, prev[1:])])

    def predict(k):
        return sum(math.comb(k, i) * diffs[i][0] for i in range(dim + 1))

    for k in range(dim + 1, scale_max + 1):
        if predict(k) != counts[k]:
            raise GeometryError(f"lattice counts are not polynomial of degree {dim} at k = {k}")
    return Fraction(diffs[dim][0], math.factorial(dim))


def wan_facet_groups(n: int, m: int, p: int) -> list[tuple[str, tuple[int, ...]]]:
    """Smith invariants of the vertex matrices of the faces of Delta(f~_a).

    f~_a is f_a (with d = 1) after raising every variable to the power
    p - 1, so its polytope is (p - 1) * Delta.  Each facet away from the
    origin is a simplex on dim vertices; the certificate holds when all
    invariant factors equal p - 1.
    """
    if not n > m:
        raise InvalidShapeError("facet certificates are only defined for n > m")
    fs = build_facets(n, m, 1)
    dim = fs.dim
    verts = {k: tuple((p - 1) * x for x in v) for k, v in fs.vertices().items()}
    out = []
    for h in fs.upper_facets:
        on = [v for v in verts.values() if h(v) == (p - 1) * fs.d]
        if len(on) != dim:
            raise GeometryError(f"facet {h.label} carries {len(on)} vertices, expected {dim}")
        columns = [list(row) for row in zip(*on)]
        out.append((h.label, invariant_factors(columns)))
    return out


def wan_certificate(n: int, m: int, p: int) -> bool:
    dim = n + m - 1
    return all(f == tuple([p - 1] * dim) for _, f in wan_facet_groups(n, m, p))
