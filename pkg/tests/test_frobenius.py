import json
import random
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from hypnp.errors import NewtonBelowHodgeError, PrecisionError, PreconditionError, DomainError
from hypnp.frobenius import (
    Ordinate,
    char_poly,
    compare,
    compare_all,
    default_precision,
    elementary_from_power_sums,
    enumerate_tuples,
    epsilon,
    lower_hull,
    newton_polygon,
    newton_polygon_with_bounds,
    precision_stable,
)
from hypnp.frobenius import _verdict
from hypnp.hodge import Polygon
from hypnp.padic import PadicRing, default_ring
from hypnp.params import CharParams


def slopes(*xs):
    return tuple(F(x) for x in xs)


def test_newton_polygon_examples():
    assert newton_polygon([0, 0, 1]).slopes == slopes(0, 1)
    assert newton_polygon([0, F(1, 2), 1]).slopes == slopes("1/2", "1/2")
    assert newton_polygon([0, 3, 1]).slopes == slopes("1/2", "1/2")
    assert newton_polygon([0, 2, 1, 3]).slopes == slopes("1/2", "1/2", 2)


@given(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=6), min_size=2, max_size=7))
def test_hull_lies_below_points(ys):
    ys = [F(0)] + ys  # e_0 = 1
    poly = newton_polygon(ys)
    verts = dict(poly.vertices)
    assert all(verts[k] <= y for k, y in enumerate(ys))
    assert list(poly.slopes) == sorted(poly.slopes)
    assert verts[0] == ys[0] and verts[len(ys) - 1] == ys[-1]
    hull = lower_hull(list(enumerate(ys)))
    assert all(verts[k] == y for k, y in hull)


def test_bounds_in_newton_polygon():
    ords = [Ordinate(F(0)), Ordinate(F(5), exact=False), Ordinate(F(1))]
    assert newton_polygon_with_bounds(ords).slopes == slopes("1/2", "1/2")
    with pytest.raises(PrecisionError):
        newton_polygon_with_bounds([Ordinate(F(0)), Ordinate(F(1, 4), exact=False), Ordinate(F(1))])
    with pytest.raises(PrecisionError):
        newton_polygon_with_bounds([Ordinate(F(0)), Ordinate(F(3), exact=False)])
    with pytest.raises(PrecisionError):
        newton_polygon(ords)
    assert str(ords[1]) == ">=5/1"


def test_newton_identities_against_sympy():
    ring = PadicRing(11, 1, 40)
    roots = [2, 3, 7, 5]
    x = sympy.symbols("x")
    poly = sympy.Poly(sympy.prod([x - r for r in roots]), x)
    want = [(-1) ** k * c for k, c in enumerate(poly.all_coeffs())][1:]
    power = [ring.from_int(sum(r**k for r in roots)) for k in range(1, 5)]
    got = elementary_from_power_sums(power)
    assert [g == int(w) for g, w in zip(got, want)] == [True] * 4
    assert elementary_from_power_sums([]) == []


def test_epsilon():
    assert epsilon(2, 0) == -1
    assert epsilon(1, 0) == 1
    assert epsilon(3, 1) == -1


def test_rank_one_charpoly():
    cp = CharParams(7, 1, (0,))
    ring = default_ring(7, 1, 30)
    for a in range(1, 7):
        (e1,) = char_poly(cp, a, ring)
        assert e1 == ring.psi(a)


def test_kloosterman_determinant():
    # the two Kloosterman roots multiply to q
    cp = CharParams(5, 1, (0, 0))
    for a in range(1, 5):
        e1, e2 = char_poly(cp, a)
        assert e2 == 5
        assert e1.ord_q() == 0


def test_kloosterman_all_ordinary():
    for r in compare_all(CharParams(5, 1, (0, 0))):
        assert r.verdict == "ordinary"
        assert r.newton_polygon.slopes == slopes(0, 1)
        assert [str(o) for o in r.charpoly_ords] == ["0/1", "0/1", "1/1"]


def test_supersingular_looking_example():
    r = compare(CharParams(5, 1, (0, 2)), 1)
    assert r.newton_polygon.slopes == slopes("1/2", "1/2")
    assert r.verdict == "ordinary"


def test_rank_three_p7():
    for cp in [CharParams(7, 1, (0, 2, 4), (1,)), CharParams(7, 1, (0, 0, 0), (3,))]:
        for r in compare_all(cp):
            assert r.verdict == "ordinary", r.to_json()


def test_resonant_route_matches_direct():
    cp = CharParams(5, 1, (0, 1, 3), (3,))
    for a in range(1, 5):
        r = compare(cp, a)
        assert r.route == "resonant-decomposition"
        assert r.verdict == "ordinary"
        # direct Newton identities on the same data
        ords = [o.ord_q() for o in char_poly(cp, a)]
        assert newton_polygon([0] + ords) == r.newton_polygon


def test_small_p_precondition():
    cp = CharParams(3, 1, (0, 0, 1))
    with pytest.raises(PreconditionError):
        compare(cp, 1)
    with pytest.raises(PreconditionError):
        default_precision(cp)
    assert default_precision(cp, allow_small_p=True) > 0
    assert compare(cp, 1, allow_small_p=True).verdict == "ordinary"
    assert compare(cp, 1, precision=40).verdict == "ordinary"


def test_compare_bad_inputs():
    with pytest.raises(DomainError):
        compare(CharParams(5, 1, (0, 0)), 0)
    with pytest.raises(PreconditionError):
        compare(CharParams(5, 1, (0, 1), (2, 3)), 1)


def test_low_precision_reports_failure():
    r = compare(CharParams(5, 1, (0, 0)), 1, precision=2)
    assert r.verdict == "precision-fail"
    assert r.required_precision and r.required_precision > 2


def test_precision_stability():
    rng = random.Random(3)
    pool = enumerate_tuples(5, 1, 3, 1)
    for cp in rng.sample(pool, 5):
        assert precision_stable(cp, rng.randrange(1, 5))


def test_verdict_logic():
    hodge = Polygon(slopes(0, 1))
    assert _verdict(Polygon(slopes(0, 1)), hodge, False) == "ordinary"
    assert _verdict(Polygon(slopes("1/2", "1/2")), hodge, False) == "newton-above-hodge"
    with pytest.raises(NewtonBelowHodgeError):
        _verdict(Polygon(slopes(0, 1)), Polygon(slopes("1/2", "1/2")), False)
    assert _verdict(Polygon(slopes(0, 1)), Polygon(slopes("1/2", "1/2")), True) == "newton-below-hodge"


def test_experimental_extension_field():
    r = compare(CharParams(3, 2, (0, 2)), 1)
    assert r.hodge_experimental
    assert r.newton_polygon.slopes == slopes("1/2", "1/2")
    assert r.hodge_polygon.slopes == slopes("1/4", "3/4")
    assert r.verdict == "newton-above-hodge"
    r = compare(CharParams(3, 2, (0, 4)), 1)
    assert not r.hodge_experimental and r.verdict == "ordinary"


def test_enumerate_tuples():
    a = enumerate_tuples(5, 1, 2, 1)
    assert a == enumerate_tuples(5, 1, 2, 1)
    assert a[0] == CharParams(5, 1, (0,))
    assert all(cp.m < cp.n and not set(cp.a_exps) & set(cp.b_exps) for cp in a)
    assert len(enumerate_tuples(5, 1, 2, 1, nonresonant_only=False)) > len(a)
    assert all(cp.orders_divide_p_minus_1() for cp in enumerate_tuples(3, 2, 2, 1))


def test_report_json(schema_validate):
    r = compare(CharParams(5, 1, (0, 1, 3), (2,)), 2)
    data = json.loads(json.dumps(r.to_json(debug_padic=True)))
    schema_validate(data, "report")
    assert data["verdict"] == "ordinary"
    assert data["route"] == "direct"
    assert len(data["traces"]) == 3
    r = compare(CharParams(5, 1, (0, 0)), 1, precision=2)
    schema_validate(r.to_json(), "report")
