from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hypnp.errors import DomainError, PrecisionError
from hypnp.fields import build_field
from hypnp.padic import PadicRing, default_ring, gauss_sum, teichmuller_generator


def digit_sum(k, p):
    total = 0
    while k:
        total += k % p
        k //= p
    return total


def test_pi_relation():
    for p in (3, 5, 7):
        ring = PadicRing(p, 1, 4 * (p - 1))
        assert ring.pi * ring.pi ** (p - 2) == -p
        assert ring.pi.ord_pi() == 1
        assert ring.pi.ord_q() == F(1, p - 1)
        assert ring.from_int(p).ord_q() == 1


def test_small_arithmetic():
    ring = PadicRing(3, 1, 8)
    one_pi = ring.one() + ring.pi
    assert one_pi**3 == -8 + 0 * ring.pi  # (1 + pi)^3 = 1 + 3 pi + 3 pi^2 + pi^3 and pi^2 = -3
    a = ring.from_int(7) * ring.pi
    assert a + ring.zero() == a
    assert a - a == 0
    assert (a * 3).ord_pi() == 1 + 2


def test_zero_has_no_order():
    ring = PadicRing(5, 1, 12)
    with pytest.raises(PrecisionError):
        ring.zero().ord_pi()
    # p^3 vanishes at pi-adic precision 12 = 3 * 4
    with pytest.raises(PrecisionError):
        ring.from_int(125).ord_q()


def test_inverse_and_division():
    ring = PadicRing(5, 1, 20)
    x = ring.from_int(3) + ring.pi * 2
    assert x * x.inverse() == 1
    with pytest.raises(DomainError):
        ring.pi.inverse()
    y = ring.from_int(50) * ring.pi
    assert y.div_int(10) == ring.from_int(5) * ring.pi
    with pytest.raises(PrecisionError):
        ring.from_int(2).div_int(5)
    with pytest.raises(ZeroDivisionError):
        y.div_int(0)


def test_ring_mismatch():
    with pytest.raises(DomainError):
        PadicRing(5, 1, 8).one() + PadicRing(7, 1, 8).one()
    with pytest.raises(DomainError):
        PadicRing(5, 2, 8)
    with pytest.raises(DomainError):
        PadicRing(5, 1, 0)


def test_to_json_round_trip():
    ring = PadicRing(5, 1, 8)
    x = ring.zeta_p
    data = x.to_json()
    assert data["precision"] == 8
    assert ring.element(data["pi_coeffs"]) == x


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_teichmuller_matches_closed_form(p):
    # omega(a) = a^(p^(k-1)) mod p^k
    ring = PadicRing(p, 1, 6 * (p - 1))
    k = ring.digits(0)
    for a in range(1, p):
        lift = ring.teichmuller(a)
        assert lift == pow(a, p ** (k - 1), p**k)
        assert lift ** (p - 1) == 1
    assert ring.teichmuller(1) == 1
    with pytest.raises(DomainError):
        ring.teichmuller(0)


@pytest.mark.parametrize("p, s", [(2, 2), (3, 2), (5, 2), (2, 3), (7, 2), (3, 3)])
def test_teichmuller_multiplicative(p, s):
    ring = default_ring(p, s, 3 * (p - 1))
    field = build_field(p, s)
    lifts = {x: ring.teichmuller(field.decode(x)) for x in range(1, field.q)}
    for x in range(1, field.q):
        assert lifts[x] ** (field.q - 1) == 1
        assert [c % p for c in lifts[x].coeffs[0]] == field.decode(x)
        for y in range(x, field.q):
            assert lifts[x] * lifts[y] == lifts[field.mul(x, y)]


@pytest.mark.parametrize("p, s", [(3, 1), (5, 1), (7, 1), (3, 2), (2, 2)])
def test_zeta_p(p, s):
    ring = default_ring(p, s, 5 * (p - 1))
    z = ring.zeta_p
    assert z**p == 1
    assert z != 1
    assert (z - 1).ord_q() == F(1, s * (p - 1))
    total = ring.zero()
    for t in range(p):
        total = total + ring.psi(t)
    assert total.is_zero()


def test_teichmuller_generator_order():
    ring = default_ring(5, 2, 8)
    w = teichmuller_generator(ring)
    assert w**24 == 1
    assert all(w**k != 1 for k in (8, 12))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_stickelberger_prime_field(p):
    ring = default_ring(p, 1, 3 * (p - 1))
    assert gauss_sum(ring, 0) == -1
    for k in range(1, p - 1):
        assert gauss_sum(ring, k).ord_q() == F(k, p - 1)


@pytest.mark.parametrize("p, s", [(3, 2), (5, 2), (2, 3), (3, 3)])
def test_stickelberger_digit_sums(p, s):
    ring = default_ring(p, s, 3 * s * (p - 1))
    q = p**s
    for k in range(1, q - 1):
        assert gauss_sum(ring, k).ord_q() == F(digit_sum(k, p), s * (p - 1))


@pytest.mark.parametrize("p, s", [(5, 1), (7, 1), (3, 2)])
def test_gauss_norm_relation(p, s):
    # G(chi) G(chi^-1) = chi(-1) q
    q = p**s
    ring = default_ring(p, s, 4 * s * (p - 1))
    for k in range(1, q - 1):
        assert gauss_sum(ring, k) * gauss_sum(ring, q - 1 - k) == (-1) ** k * q


@pytest.mark.parametrize("p, s", [(3, 1), (5, 1), (3, 2)])
def test_hasse_davenport(p, s):
    ring = default_ring(p, s, 4 * s * (p - 1))
    for k in range(p**s - 1):
        g1 = gauss_sum(ring, k)
        assert gauss_sum(ring, k, ext=2) == -(g1 * g1)


def test_gauss_sum_bad_k():
    ring = default_ring(5, 1, 8)
    with pytest.raises(DomainError):
        gauss_sum(ring, 4)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 8), st.integers(0, 8))
def test_precision_truncation_commutes(a, b, c, d):
    lo, hi = PadicRing(5, 1, 8), PadicRing(5, 1, 20)

    def make(ring):
        return (ring.from_int(a) + ring.pi * c) * (ring.from_int(b) + ring.pi**2 * d)

    x_hi = make(hi)
    assert lo.element(x_hi.coeffs) == make(lo)
    assert hi.zeta_p.coeffs[0][0] % 5**2 == lo.zeta_p.coeffs[0][0] % 5**2
