import itertools

import pytest

from hypnp.errors import DomainError, ResourceError
from hypnp.fields import FqField, build_field, is_irreducible, smallest_irreducible


def test_small_field_generators():
    assert build_field(5).generator == 2
    assert build_field(7).generator == 3
    f25 = build_field(5, 2)
    assert f25.modulus == (2, 0, 1)
    assert f25.generator == 6
    f27 = build_field(3, 3)
    assert f27.modulus == (1, 2, 0, 1)
    assert f27.generator == 3


@pytest.mark.parametrize("p, k", [(2, 1), (2, 3), (3, 2), (5, 2), (3, 3), (7, 2)])
def test_generator_is_primitive(p, k):
    f = build_field(p, k)
    seen = {f.power(f.generator, i) for i in range(f.q - 1)}
    assert seen == set(range(1, f.q))


def test_irreducibility_by_hand():
    # x^2 + 1 is reducible mod 5 and irreducible mod 3
    assert not is_irreducible([1, 0, 1], 5)
    assert is_irreducible([1, 0, 1], 3)
    assert smallest_irreducible(2, 2) == (1, 1, 1)


@pytest.mark.parametrize("p, k", [(3, 2), (5, 2), (2, 4)])
def test_field_axioms(p, k):
    f = build_field(p, k)
    elems = range(f.q)
    for x, y in itertools.product(elems, repeat=2):
        assert f.add(x, y) == f.add(y, x)
        assert f.mul(x, y) == f.mul(y, x)
    for x in range(1, f.q):
        assert f.mul(x, f.inv(x)) == 1
        assert f.add(x, f.neg(x)) == 0
        assert f.power(x, f.q - 1) == 1


@pytest.mark.parametrize("p, k", [(3, 2), (5, 2), (3, 3), (2, 3)])
def test_trace_is_linear_surjective(p, k):
    f = build_field(p, k)
    vals = [f.trace(x) for x in range(f.q)]
    assert set(vals) == set(range(p))
    for x, y in itertools.product(range(0, f.q, 3), range(f.q)):
        assert f.trace(f.add(x, y)) == (vals[x] + vals[y]) % p
    # each trace value is taken q/p times
    assert all(vals.count(t) == f.q // p for t in range(p))


def test_trace_is_frobenius_sum():
    f = build_field(5, 2)
    for x in range(1, f.q):
        assert f.trace(x) == f.add(x, f.power(x, 5)) % 5


@pytest.mark.parametrize("p, sub_k, k", [(5, 1, 2), (3, 1, 2), (2, 2, 4), (3, 2, 4)])
def test_embedding_and_norm(p, sub_k, k):
    sub, big = build_field(p, sub_k), build_field(p, k)
    emb = big.embedding(sub)
    assert len(set(emb.tolist())) == sub.q
    for x, y in itertools.product(range(sub.q), repeat=2):
        assert emb[sub.mul(x, y)] == big.mul(int(emb[x]), int(emb[y]))
        assert emb[sub.add(x, y)] == big.add(int(emb[x]), int(emb[y]))
    step = (big.q - 1) // (sub.q - 1)
    norms = [big.norm(x, sub) for x in range(1, big.q)]
    assert set(norms) == set(range(1, sub.q))
    for x in range(1, big.q):
        assert emb[big.norm(x, sub)] == big.power(x, step)


def test_bad_inputs():
    with pytest.raises(DomainError):
        FqField(4)
    with pytest.raises(DomainError):
        FqField(5, 0)
    with pytest.raises(ResourceError):
        FqField(101, 3, budget=10**5)
    with pytest.raises(DomainError):
        build_field(5, 2).embedding(build_field(3, 1))
