"""Fiberwise Frobenius characteristic polynomials and their Newton polygons.

For a fiber a in F_q^x the n Frobenius eigenvalues lambda_i satisfy
sum lambda_i^j = eps * S_j(a), where S_j is the hypergeometric sum over
F_{q^j} and eps = (-1)^(n+m-1).  Newton's identities turn these power sums
into the elementary symmetric functions e_k, and the lower convex hull of
(k, ord_q e_k) is the Newton polygon.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .charsum import SumValue, hyp_sum, reduce_resonant
from .errors import (
    ConventionError,
    DomainError,
    NewtonBelowHodgeError,
    PrecisionError,
    PreconditionError,
)
from .hodge import Polygon, as_hodge_polygon, theta
from .padic import PadicElement, PadicRing, default_ring, gauss_sum
from .params import CharParams, is_nonresonant, rational_str

VERDICTS = ("ordinary", "newton-above-hodge", "newton-below-hodge", "precision-fail")


@dataclass(frozen=True)
class Ordinate:
    """ord_q of a coefficient, or a lower bound when it vanished to precision."""

    value: Fraction
    exact: bool = True

    def __str__(self):
        text = rational_str(self.value)
        return text if self.exact else f">={text}"


def epsilon(n: int, m: int) -> int:
    return (-1) ** (n + m - 1)


def _vp(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def default_precision(cp: CharParams, allow_small_p: bool = False) -> int:
    """s(p-1)(ceil(sum theta) + n + 2), plus the digits lost to p | k when p <= n."""
    unit = cp.s * (cp.p - 1)
    endpoint = math.ceil(sum(_hodge(cp).slopes, Fraction(0)))
    prec = unit * (endpoint + cp.n + 2)
    if cp.p <= cp.n:
        if not allow_small_p:
            raise PreconditionError(
                f"p = {cp.p} <= n = {cp.n}: Newton's identities divide by p; "
                "pass allow_small_p=True (or an explicit precision) to proceed"
            )
        prec += unit * (sum(_vp(k, cp.p) for k in range(1, cp.n + 1)) + 1)
    return prec


def _hodge(cp: CharParams) -> Polygon:
    return as_hodge_polygon(cp.hyp, cp.p, cp.s)


def power_sums(cp: CharParams, a: int, ring: PadicRing) -> list[SumValue]:
    return [hyp_sum(cp, a, ext, ring) for ext in range(1, cp.n + 1)]


def elementary_from_power_sums(t: Sequence[PadicElement]) -> list[PadicElement]:
    """e_1..e_n from p_1..p_n via k e_k = sum_{i=1}^k (-1)^(i-1) e_(k-i) p_i."""
    if not t:
        return []
    ring = t[0].ring
    e = [ring.one()]
    for k in range(1, len(t) + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = e[k - i] * t[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc.div_int(k))
    return e[1:]


def char_poly(cp: CharParams, a: int, ring: PadicRing | None = None,
              precision: int | None = None, allow_small_p: bool = False,
              traces: Sequence[SumValue] | None = None) -> list[PadicElement]:
    """e_1..e_n of the Frobenius eigenvalues at the fiber a."""
    if ring is None:
        if precision is None:
            precision = default_precision(cp, allow_small_p)
        ring = default_ring(cp.p, cp.s, precision)
    if traces is None:
        traces = power_sums(cp, a, ring)
    eps = epsilon(cp.n, cp.m)
    t = [v.padic * eps for v in traces]
    return elementary_from_power_sums(t)


def _ordinates(coeffs: Sequence[PadicElement]) -> list[Ordinate]:
    out = [Ordinate(Fraction(0))]
    for c in coeffs:
        try:
            out.append(Ordinate(c.ord_q()))
        except PrecisionError:
            out.append(Ordinate(Fraction(c.precision, c.ring.s * c.ring.e), exact=False))
    return out


def lower_hull(points: Sequence[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Lower convex hull of points with distinct integer abscissae, left to right."""
    pts = sorted(points)
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it is on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _slopes_from_hull(hull) -> list[Fraction]:
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1) / (x2 - x1)] * (x2 - x1))
    return slopes


def newton_polygon(e_ords: Sequence) -> Polygon:
    """Newton polygon of the ordinates ord(e_0), ..., ord(e_n) (all finite)."""
    ords = []
    for y in e_ords:
        if isinstance(y, Ordinate):
            if not y.exact:
                raise PrecisionError("a coefficient vanished to working precision")
            y = y.value
        ords.append(Fraction(y))
    if len(ords) < 1:
        raise DomainError("need at least e_0")
    return Polygon(tuple(_slopes_from_hull(lower_hull(list(enumerate(ords))))))


def newton_polygon_with_bounds(ords: Sequence[Ordinate]) -> Polygon:
    """Newton polygon when some ordinates are only lower bounds.

    The hull of the exact points is the answer provided every bound lies
    on or above it; otherwise the unknown coefficient could change the
    hull and a PrecisionError is raised.
    """
    if not ords[0].exact or not ords[-1].exact:
        raise PrecisionError("an endpoint coefficient vanished to working precision")
    exact = [(k, o.value) for k, o in enumerate(ords) if o.exact]
    hull = lower_hull(exact)
    poly = Polygon(tuple(_slopes_from_hull(hull)))
    verts = dict(poly.vertices)
    for k, o in enumerate(ords):
        if not o.exact and o.value < verts[k]:
            raise PrecisionError(f"coefficient e_{k} is only known to be >= {o.value}")
    return poly


@dataclass
class FrobeniusReport:
    params: CharParams
    point: int
    precision: int
    epsilon: int
    route: str
    verdict: str
    hodge_polygon: Polygon
    hodge_experimental: bool
    newton_polygon: Polygon | None = None
    charpoly_ords: list[Ordinate] = field(default_factory=list)
    traces: list[SumValue] = field(default_factory=list)
    required_precision: int | None = None
    detail: str = ""

    @property
    def ordinary(self) -> bool:
        return self.verdict == "ordinary"

    def to_json(self, debug_padic: bool = False) -> dict:
        return {
            "params": self.params.to_json(),
            "alpha": [rational_str(x) for x in self.params.hyp.alpha],
            "beta": [rational_str(x) for x in self.params.hyp.beta],
            "point": self.point,
            "precision": self.precision,
            "epsilon": self.epsilon,
            "route": self.route,
            "verdict": self.verdict,
            "hodge_experimental": self.hodge_experimental,
            "charpoly_ords": [str(o) for o in self.charpoly_ords],
            "newton_polygon": None if self.newton_polygon is None else self.newton_polygon.to_json(),
            "hodge_polygon": self.hodge_polygon.to_json(),
            "required_precision": self.required_precision,
            "traces": [v.to_json(debug_padic) for v in self.traces],
            "detail": self.detail,
        }


def _verdict(newton: Polygon, hodge: Polygon, experimental: bool) -> str:
    if newton.slopes == hodge.slopes:
        return "ordinary"
    if newton.lies_on_or_above(hodge) and newton.endpoint == hodge.endpoint:
        return "newton-above-hodge"
    if experimental:
        return "newton-below-hodge"
    raise NewtonBelowHodgeError(
        f"Newton slopes {[str(x) for x in newton.slopes]} fall below "
        f"Hodge slopes {[str(x) for x in hodge.slopes]}"
    )


def _check_point(cp: CharParams, a: int) -> None:
    if not 0 < int(a) < cp.q:
        raise DomainError(f"point {a} is not a nonzero element of F_{cp.q}")


def compare(cp: CharParams, a: int, precision: int | None = None,
            allow_small_p: bool = False, keep_traces: bool = True) -> FrobeniusReport:
    """Newton polygon at the fiber a against the Hodge polygon.

    Non-resonant data take the direct route through power sums.  Resonant
    data are reduced to rank n-1: the eigenvalues are q times those of the
    reduced sum together with one Gauss-sum product.
    """
    _check_point(cp, a)
    if cp.n <= cp.m:
        raise PreconditionError("the comparison needs n > m")
    if not is_nonresonant(cp.hyp):
        return _compare_resonant(cp, a, precision, allow_small_p)
    hodge = _hodge(cp)
    experimental = not cp.orders_divide_p_minus_1()
    if precision is None:
        precision = default_precision(cp, allow_small_p)
    elif cp.p <= cp.n and not allow_small_p:
        allow_small_p = True  # an explicit precision is the override
    ring = default_ring(cp.p, cp.s, precision)
    eps = epsilon(cp.n, cp.m)
    traces = power_sums(cp, a, ring)
    report = FrobeniusReport(cp, int(a), precision, eps, "direct", "precision-fail", hodge,
                             experimental, traces=traces if keep_traces else [])
    try:
        coeffs = char_poly(cp, a, ring, traces=traces)
    except PrecisionError as exc:
        report.required_precision = exc.required or 2 * precision
        report.detail = str(exc)
        return report
    ords = _ordinates(coeffs)
    report.charpoly_ords = ords
    try:
        newton = newton_polygon_with_bounds(ords)
    except PrecisionError as exc:
        report.required_precision = 2 * precision
        report.detail = str(exc)
        return report
    report.newton_polygon = newton
    if not experimental and newton.endpoint[1] != sum(theta(cp.hyp), Fraction(0)):
        raise ConventionError(
            f"ord e_n = {newton.endpoint[1]} differs from sum(theta) = {sum(theta(cp.hyp))}"
        )
    report.verdict = _verdict(newton, hodge, experimental)
    return report


def _compare_resonant(cp: CharParams, a: int, precision: int | None,
                      allow_small_p: bool) -> FrobeniusReport:
    reduced, k = reduce_resonant(cp)
    hodge = _hodge(cp)
    experimental = not cp.orders_divide_p_minus_1()
    sub = compare(reduced, a, precision, allow_small_p, keep_traces=False)
    prec = sub.precision
    report = FrobeniusReport(cp, int(a), prec, epsilon(cp.n, cp.m), "resonant-decomposition",
                             "precision-fail", hodge, experimental,
                             detail=f"reduced to {reduced.to_json()} after twisting by omega^{-k}")
    if sub.newton_polygon is None:
        report.required_precision = sub.required_precision
        return report
    ring = default_ring(cp.p, cp.s, max(prec, cp.s * (cp.p - 1) * (cp.n + 2)))
    d = cp.q - 1
    g = ring.one()
    for x in reduced.a_exps:
        g = g * gauss_sum(ring, (-x) % d)
    for x in reduced.b_exps:
        g = g * gauss_sum(ring, x)
    extra = g.ord_q()
    newton = Polygon(tuple(s + 1 for s in sub.newton_polygon.slopes) + (extra,))
    report.newton_polygon = newton
    report.charpoly_ords = [Ordinate(y) for _, y in newton.vertices]
    report.verdict = _verdict(newton, hodge, experimental)
    return report


def compare_all(cp: CharParams, precision: int | None = None,
                allow_small_p: bool = False, keep_traces: bool = False) -> list[FrobeniusReport]:
    return [compare(cp, a, precision, allow_small_p, keep_traces) for a in range(1, cp.q)]


def precision_stable(cp: CharParams, a: int, bump: int | None = None,
                     allow_small_p: bool = False) -> bool:
    """Recompute at a higher precision and check the Newton polygon is unchanged."""
    first = compare(cp, a, allow_small_p=allow_small_p, keep_traces=False)
    if first.newton_polygon is None:
        return False
    bump = cp.s * (cp.p - 1) * 3 if bump is None else bump
    second = compare(cp, a, first.precision + bump, allow_small_p, keep_traces=False)
    return second.newton_polygon == first.newton_polygon


def enumerate_tuples(p: int, s: int, nmax: int, mmax: int,
                     nonresonant_only: bool = True) -> list[CharParams]:
    """Character data with orders dividing p-1, n <= nmax, m <= mmax, m < n.

    Enumeration order is (n, m, a_exps, b_exps) lexicographic, so sweeps
    are reproducible.
    """
    q = p**s
    step = (q - 1) // (p - 1)
    values = [step * i for i in range(p - 1)]
    out = []
    for n in range(1, nmax + 1):
        for m in range(0, min(mmax, n - 1) + 1):
            for a in itertools.combinations_with_replacement(values, n):
                for b in itertools.combinations_with_replacement(values, m):
                    if nonresonant_only and set(a) & set(b):
                        continue
                    out.append(CharParams(p, s, a, b))
    return out
