import cmath
import itertools

import numpy as np
import pytest

from hypnp import charsum
from hypnp.charsum import (
    fiber_counts,
    group_ring_counts,
    hyp_sum,
    hyp_sum_bruteforce,
    reduce_resonant,
    resonant_decomposition_check,
    resonant_decomposition_terms,
)
from hypnp.errors import DomainError, PreconditionError, ResourceError
from hypnp.fields import build_field
from hypnp.frobenius import compare
from hypnp.padic import default_ring
from hypnp.params import CharParams, is_nonresonant


def complex_sum(cp, a):
    """Prime-field sum in C with chi(g^l) = exp(2 pi i a l / (p - 1))."""
    p = cp.p
    g = build_field(p).generator
    log = {pow(g, k, p): k for k in range(p - 1)}
    n = cp.n
    total = 0j
    for combo in itertools.product(range(1, p), repeat=cp.n + cp.m - 1):
        xs, ys = list(combo[: n - 1]), list(combo[n - 1:])
        x1 = a * np.prod(ys, dtype=object) * pow(int(np.prod(xs, dtype=object)), -1, p) % p
        xs = [x1] + xs
        phase = (sum(xs) - sum(ys)) / p
        for x, k in zip(xs, cp.a_exps):
            phase += k * log[x] / (p - 1)
        for y, k in zip(ys, cp.b_exps):
            phase -= k * log[y] / (p - 1)
        total += cmath.exp(2j * cmath.pi * phase)
    return total


def test_rank_one_is_additive_character():
    cp = CharParams(5, 1, (0,))
    for a in range(1, 5):
        assert hyp_sum(cp, a).padic == hyp_sum(cp, a).ring.psi(a)


def test_kloosterman_p5_value():
    cp = CharParams(5, 1, (0, 0))
    v = hyp_sum(cp, 1)
    ring = v.ring
    z = ring.zeta_p
    assert v.padic == 2 + z**2 + z**3
    assert v.ord_q() == 0
    assert abs(v.complex_value() - (2 + 2 * np.cos(4 * np.pi / 5))) < 1e-12


@pytest.mark.parametrize(
    "cp",
    [
        CharParams(5, 1, (0, 0)),
        CharParams(5, 1, (0, 2)),
        CharParams(5, 1, (0, 1, 3), (2,)),
        CharParams(7, 1, (0, 1, 4), (2,)),
        CharParams(7, 1, (1, 3), (2,)),
        CharParams(5, 1, (0, 1), (1,)),
    ],
)
def test_complex_values_match_direct_sum(cp):
    for a in range(1, cp.p):
        assert abs(hyp_sum(cp, a).complex_value() - complex_sum(cp, a)) < 1e-9


@pytest.mark.parametrize(
    "cp, ext",
    [
        (CharParams(5, 1, (0, 0)), 1),
        (CharParams(5, 1, (0, 2), (1,)), 1),
        (CharParams(3, 1, (0, 1, 1)), 1),
        (CharParams(3, 2, (0, 4)), 1),
        (CharParams(3, 2, (0, 2), (6,)), 1),
        (CharParams(5, 1, (0, 2)), 2),
        (CharParams(3, 1, (0, 1), (1,)), 2),
    ],
)
def test_kernel_matches_bruteforce(cp, ext):
    for a in range(1, cp.q):
        assert hyp_sum(cp, a, ext).padic == hyp_sum_bruteforce(cp, a, ext)


def test_counts_total_terms():
    cp = CharParams(5, 1, (0, 1, 2), (3,))
    counts = fiber_counts(cp)
    # every fiber has (q-1)^(n+m-1) summands
    assert (counts.sum(axis=(1, 2)) == 4**3).all()
    assert not counts.flags.writeable
    assert group_ring_counts(cp, 3).shape == (5, 4)


def test_archimedean_bound():
    for cp in [CharParams(5, 1, (0, 2)), CharParams(7, 1, (0, 1, 3), (2,)), CharParams(5, 1, (0, 1, 3))]:
        assert is_nonresonant(cp.hyp)
        for ext in (1, 2):
            bound = cp.n * cp.q ** (ext * (cp.n + cp.m - 1) / 2) + 1e-9
            for a in range(1, cp.q):
                assert abs(hyp_sum(cp, a, ext).complex_value()) <= bound


def test_galois_conjugate_fibers():
    # characters through the norm to F_p are Frobenius-stable, so a and a^p give conjugate sums
    cp = CharParams(3, 2, (0, 4))
    assert cp.orders_divide_p_minus_1()
    field = build_field(3, 2)
    for a in range(1, 9):
        ap = field.power(a, 3)
        assert [str(o) for o in compare(cp, a).charpoly_ords] == [str(o) for o in compare(cp, ap).charpoly_ords]
        ring = default_ring(3, 2, 24)
        assert abs(abs(hyp_sum(cp, a, 1, ring).complex_value()) - abs(hyp_sum(cp, ap, 1, ring).complex_value())) < 1e-9


@pytest.mark.parametrize(
    "cp, points",
    [
        (CharParams(5, 1, (0, 2), (0,)), [2]),
        (CharParams(7, 1, (0, 0, 1), (0,)), [3]),
        (CharParams(3, 1, (0, 0), (0,)), [1, 2]),
        (CharParams(5, 1, (0, 1, 3), (0, 2)), [1, 4]),
    ],
)
def test_resonant_decomposition(cp, points):
    for a in points:
        for ext in (1, 2):
            assert resonant_decomposition_check(cp, a, ext)


def test_resonant_sign_convention():
    cp = CharParams(5, 1, (0, 0, 0), (0, 0))
    terms = resonant_decomposition_terms(cp, 1)
    assert terms["sign"] == 1
    assert resonant_decomposition_check(cp, 1)
    assert not resonant_decomposition_check(cp, 1, convention="literal")
    # for m = 1 the two signs agree
    cp = CharParams(5, 1, (0, 0), (0,))
    assert resonant_decomposition_check(cp, 3, convention="literal")
    with pytest.raises(DomainError):
        resonant_decomposition_check(cp, 1, convention="other")


def test_resonant_preconditions():
    with pytest.raises(PreconditionError):
        resonant_decomposition_terms(CharParams(5, 1, (0, 0)), 1)
    with pytest.raises(PreconditionError):
        resonant_decomposition_terms(CharParams(5, 1, (1, 2), (1,)), 1)
    with pytest.raises(PreconditionError):
        reduce_resonant(CharParams(5, 1, (0, 2), (1,)))


def test_reduce_resonant_twists():
    reduced, k = reduce_resonant(CharParams(7, 1, (1, 3, 4), (3, 5)))
    assert k == 3
    assert reduced == CharParams(7, 1, (1, 4), (2,))


def test_point_and_budget_errors(monkeypatch):
    cp = CharParams(5, 1, (0, 0))
    with pytest.raises(DomainError):
        hyp_sum(cp, 0)
    with pytest.raises(DomainError):
        hyp_sum(cp, 5)
    with pytest.raises(ResourceError):
        fiber_counts(CharParams(7, 1, (0, 1, 2), (3,)), 1, budget=1000)
    with pytest.raises(ResourceError):
        hyp_sum_bruteforce(CharParams(7, 1, (0, 1, 2), (3,)), 1, budget=100)
    monkeypatch.setattr(charsum, "BRUTE_BUDGET", 10)
    with pytest.raises(ResourceError):
        hyp_sum_bruteforce(cp, 1, ext=2)


def test_to_json_shape():
    v = hyp_sum(CharParams(5, 1, (0, 0)), 1)
    data = v.to_json(debug_padic=True)
    assert data["ord_q"] == "0/1"
    assert {(e["t"], e["c"], e["coeff"]) for e in data["group_ring"]} == {(0, 0, 2), (2, 0, 1), (3, 0, 1)}
    assert "padic" in data
