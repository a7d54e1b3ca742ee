from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hypnp.errors import DomainError, InvalidShapeError
from hypnp.params import (
    CharParams,
    HypParams,
    conjugate,
    frobenius_twist,
    is_nonresonant,
    normalize,
    parse_rational_list,
    resonant_convention,
)


def fr(*xs):
    return tuple(F(x) for x in xs)


@pytest.mark.parametrize(
    "alpha, beta, want_a, want_b",
    [
        (("5/3", "-1/3"), (), ("2/3", "2/3"), ()),
        (("0", "1/2"), ("1/4",), ("0", "1/2"), ("1/4",)),
        (("7/5", "0"), ("9/5",), ("0", "2/5"), ("4/5",)),
    ],
)
def test_normalize_examples(alpha, beta, want_a, want_b):
    out = normalize(fr(*alpha), fr(*beta))
    assert out.alpha == fr(*want_a)
    assert out.beta == fr(*want_b)


def test_normalize_relabels_longer_sequence_as_alpha():
    out = normalize(fr("1/2"), fr("0", "1/3"))
    assert out.n == 2 and out.m == 1


def test_hypparams_rejects_unnormalized():
    with pytest.raises(DomainError):
        HypParams(fr("1/2", "0"))
    with pytest.raises(DomainError):
        HypParams(fr("3/2"))
    with pytest.raises(InvalidShapeError):
        HypParams(fr("0"), fr("1/2", "1/3"))


@pytest.mark.parametrize(
    "alpha, beta, want",
    [
        (("0", "1/2"), ("1/3",), True),
        (("0", "1/3"), ("1/3",), False),
        (("0", "0", "0", "0"), ("1/5", "2/5", "3/5", "4/5"), True),
    ],
)
def test_nonresonance(alpha, beta, want):
    assert is_nonresonant(HypParams(fr(*alpha), fr(*beta))) is want


@pytest.mark.parametrize(
    "alpha, want",
    [(("0", "1/2"), ("0", "1/2")), (("0", "1/3"), ("0", "2/3")), (("0",), ("0",))],
)
def test_conjugate_examples(alpha, want):
    assert conjugate(HypParams(fr(*alpha))).alpha == fr(*want)


def test_conjugate_zero_beta_wraps_to_zero():
    assert conjugate(HypParams(fr("0", "1/2"), fr("0"))).beta == fr("0")


@pytest.mark.parametrize(
    "alpha, prime, want",
    [(("0", "1/2"), 5, ("0", "1/2")), (("0", "1/8"), 3, ("0", "3/8"))],
)
def test_frobenius_twist_examples(alpha, prime, want):
    assert frobenius_twist(HypParams(fr(*alpha)), prime).alpha == fr(*want)


def test_resonant_convention_moves_zeros_to_one():
    alpha, beta = resonant_convention(HypParams(fr("0", "1/3"), fr("0")))
    assert alpha == fr("1/3", "1") and beta == fr("1")


def test_parse_rational_list():
    assert parse_rational_list("0,1/2") == fr("0", "1/2")
    assert parse_rational_list("") == ()
    with pytest.raises(DomainError):
        parse_rational_list("0,x")


def test_json_round_trip():
    hp = HypParams(fr("0", "1/3"), fr("1/2",))
    assert HypParams.from_json(hp.to_json()) == hp
    assert hp.to_json() == {"alpha": ["0/1", "1/3"], "beta": ["1/2"]}


def test_charparams_basics():
    cp = CharParams(7, 1, (3, 0, 1), (2,))
    assert cp.a_exps == (0, 1, 3)
    assert cp.hyp.alpha == fr("0", "1/6", "1/2")
    assert cp.orders_divide_p_minus_1()
    assert CharParams.from_hyp(cp.hyp, 7) == cp
    assert not CharParams(3, 2, (0, 1)).orders_divide_p_minus_1()
    assert CharParams(3, 2, (0, 4)).orders_divide_p_minus_1()
    with pytest.raises(DomainError):
        CharParams(4, 1, (0,))
    with pytest.raises(DomainError):
        CharParams(5, 1, (4,))
    with pytest.raises(DomainError):
        CharParams.from_hyp(HypParams(fr("1/3")), 5)


# property tests ---------------------------------------------------------------

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=24)


@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, max_size=5))
def test_normalize_idempotent(a, b):
    once = normalize(a, b)
    assert normalize(once.alpha, once.beta) == once


@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, max_size=5))
def test_conjugate_involution_and_resonance(a, b):
    hp = normalize(a, b)
    assert is_nonresonant(hp) == is_nonresonant(conjugate(hp))
    if is_nonresonant(hp):
        assert conjugate(conjugate(hp)) == hp


@given(st.sampled_from([(3, 2), (5, 2), (3, 3), (7, 1), (2, 4)]), st.data())
def test_twist_orbit_closes(ps, data):
    prime, s = ps
    q1 = prime**s - 1
    nums = data.draw(st.lists(st.integers(0, q1 - 1), min_size=1, max_size=4))
    hp = normalize([F(k, q1) for k in nums])
    out = hp
    for _ in range(s):
        out = frobenius_twist(out, prime)
    assert out == hp
