"""Irregular Hodge numbers and polygons of hypergeometric connections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .params import HypParams, conjugate, denominators_divide, frobenius_twist, rational_str


@dataclass(frozen=True)
class Polygon:
    """Convex polygon starting at the origin, stored as its slope multiset."""

    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(sorted(Fraction(x) for x in self.slopes)))

    @classmethod
    def from_slopes(cls, slopes: Iterable) -> "Polygon":
        return cls(tuple(slopes))

    @property
    def rank(self) -> int:
        return len(self.slopes)

    @property
    def vertices(self) -> tuple[tuple[int, Fraction], ...]:
        """Every integer abscissa of the chain, not only the break points."""
        pts = [(0, Fraction(0))]
        y = Fraction(0)
        for k, s in enumerate(self.slopes, 1):
            y += s
            pts.append((k, y))
        return tuple(pts)

    @property
    def break_points(self) -> tuple[tuple[int, Fraction], ...]:
        pts = self.vertices
        keep = [pts[0]]
        for k in range(1, len(pts) - 1):
            if self.slopes[k - 1] != self.slopes[k]:
                keep.append(pts[k])
        if len(pts) > 1:
            keep.append(pts[-1])
        return tuple(keep)

    @property
    def endpoint(self) -> tuple[int, Fraction]:
        return self.vertices[-1]

    def lies_on_or_above(self, other: "Polygon") -> bool:
        """Pointwise comparison of the two chains at every integer abscissa."""
        if self.rank != other.rank:
            raise DomainError("polygons of different length")
        return all(y1 >= y2 for (_, y1), (_, y2) in zip(self.vertices, other.vertices))

    def to_json(self) -> dict:
        return {
            "slopes": [rational_str(s) for s in self.slopes],
            "vertices": [[k, rational_str(y)] for k, y in self.vertices],
        }


def theta(hp: HypParams) -> tuple[Fraction, ...]:
    """Jump positions theta(1..n) of the irregular Hodge filtration.

    theta(k) = (n-m) alpha_k + #{j : beta_j < alpha_k} + (n-k)
               - sum(alpha) + sum(beta)
    """
    n, m = hp.n, hp.m
    shift = sum(hp.beta, Fraction(0)) - sum(hp.alpha, Fraction(0))
    out = []
    for k, a in enumerate(hp.alpha, 1):
        below = sum(1 for b in hp.beta if b < a)
        out.append((n - m) * a + below + (n - k) + shift)
    return tuple(out)


def irregular_hodge_polygon(hp: HypParams) -> Polygon:
    return Polygon(theta(hp))


def hodge_numbers(hp: HypParams) -> dict[Fraction, int]:
    """Rank of each graded piece: jump position -> multiplicity."""
    counts: dict[Fraction, int] = {}
    for t in theta(hp):
        counts[t] = counts.get(t, 0) + 1
    return dict(sorted(counts.items()))


def duality_pairing(hp: HypParams) -> bool:
    """Check {theta(k)} == {n+m-1 - theta_bar(k)} as multisets."""
    top = hp.n + hp.m - 1
    lhs = sorted(theta(hp))
    rhs = sorted(top - t for t in theta(conjugate(hp)))
    return lhs == rhs


def twist_orbit(hp: HypParams, prime: int, s: int) -> list[HypParams]:
    orbit = [hp]
    for _ in range(s - 1):
        orbit.append(frobenius_twist(orbit[-1], prime))
    return orbit


def orbit_theta_multisets(hp: HypParams, prime: int, s: int) -> list[tuple[Fraction, ...]]:
    """Sorted theta multisets along the Frobenius-twist orbit of length s."""
    if not denominators_divide(hp, prime**s - 1):
        raise DomainError(f"denominators of {hp} do not divide {prime}^{s} - 1")
    return [tuple(sorted(theta(x))) for x in twist_orbit(hp, prime, s)]


def as_hodge_polygon(hp: HypParams, prime: int, s: int = 1) -> Polygon:
    """Hodge polygon of the twisted exponential sum, from orbit-averaged weights.

    For ``s == 1`` this is the irregular Hodge polygon.  For ``s > 1`` the
    j-th slope is the mean over the twist orbit of the j-th smallest theta
    value; this extension is experimental (see README).
    """
    rows = orbit_theta_multisets(hp, prime, s)
    slopes = [sum(col, Fraction(0)) / s for col in zip(*rows)]
    return Polygon(tuple(slopes))


def polygon_from_sequence(slopes: Sequence) -> Polygon:
    return Polygon(tuple(Fraction(x) for x in slopes))
