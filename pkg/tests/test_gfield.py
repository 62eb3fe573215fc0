import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classone.errors import FieldDomainError, FieldMismatchError, FieldRangeError
from classone.gfield import (
    MODULI,
    GFElem,
    embed,
    embedding_image,
    inv,
    is_irreducible,
    make_field,
    mul,
    poly_mulmod,
    power,
)


def test_prime_field():
    F = make_field(1)
    assert F.order == 2
    assert [e.bits for e in F.elements()] == [0, 1]
    assert F.one * F.one == F.one


def test_gf4_modulus_and_product():
    F = make_field(2)
    assert F.modulus == 0b111
    x = F(0b10)
    assert (x * x).bits == 0b11


def test_gf16_order_of_x():
    # brute force on raw polynomials, no tables
    m = MODULI[4]
    seen, t = [], 1
    for n in range(1, 16):
        t = poly_mulmod(t, 0b10, m)
        seen.append(t)
        if t == 1:
            break
    assert n == 15
    assert len(list(make_field(4).elements())) == 16


@pytest.mark.parametrize("k", range(1, 13))
def test_moduli_irreducible(k):
    assert is_irreducible(MODULI[k])
    assert make_field(k).modulus == MODULI[k]


def test_reducible_detected():
    assert not is_irreducible(0b101)  # x^2 + 1 = (x+1)^2
    assert not is_irreducible(0b10101)  # (x^2+x+1)^2


@pytest.mark.parametrize("k", [0, 13, -1])
def test_range(k):
    with pytest.raises(FieldRangeError):
        make_field(k)


def test_deterministic():
    assert make_field(8) is make_field(8)
    assert make_field(5).exp == make_field(5).exp


@pytest.mark.parametrize("k", range(1, 7))
def test_table_mul_matches_polynomial_mul(k):
    F = make_field(k)
    for a in range(F.order):
        for b in range(F.order):
            assert (F(a) * F(b)).bits == poly_mulmod(a, b, F.modulus)


@pytest.mark.parametrize("k", range(1, 13))
def test_inverse_and_lagrange(k):
    F = make_field(k)
    rng = random.Random(k)
    assert inv(F.one) == F.one
    for _ in range(200):
        a = F(rng.randrange(1, F.order))
        assert a * inv(a) == F.one
        assert power(a, F.order - 1) == F.one
        assert a ** F.order == a


def test_inverse_of_zero():
    with pytest.raises(FieldDomainError):
        inv(make_field(3).zero)


def test_mixed_fields():
    with pytest.raises(FieldMismatchError):
        make_field(2).one + make_field(3).one
    with pytest.raises(FieldMismatchError):
        mul(make_field(2).one, make_field(4).one)


def test_printing():
    assert str(make_field(4)) == "GF(2^4)/0x13"
    assert str(make_field(8)(0xAB)) == "0xab"


elems = st.integers(min_value=1, max_value=8).flatmap(
    lambda k: st.tuples(*(st.integers(0, (1 << k) - 1) for _ in range(3))).map(
        lambda t: tuple(GFElem(v, make_field(k)) for v in t)
    )
)


@given(elems)
@settings(max_examples=300)
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == a.ctx.zero
    assert (a + b) ** 2 == a**2 + b**2


def test_embed_units():
    for d in range(1, 9):
        big = make_field(d)
        assert embed(make_field(1).zero, big) == big.zero
        assert embed(make_field(1).one, big) == big.one


def test_gf4_into_gf16_smallest_root():
    big = make_field(4)
    roots = [r for r in big.elements() if r * r + r + big.one == big.zero]
    assert len(roots) == 2
    assert embedding_image(2, 4) == min(r.bits for r in roots)
    assert embed(make_field(2)(0b10), big).bits == min(r.bits for r in roots)


def test_embed_not_dividing():
    with pytest.raises(FieldDomainError):
        embed(make_field(2).one, make_field(3))


@pytest.mark.parametrize("e,d", [(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (2, 8)])
def test_embed_homomorphism_exhaustive(e, d):
    small, big = make_field(e), make_field(d)
    for a in small.elements():
        for b in small.elements():
            assert embed(a + b, big) == embed(a, big) + embed(b, big)
            assert embed(a * b, big) == embed(a, big) * embed(b, big)
    images = {embed(a, big) for a in small.elements()}
    assert len(images) == small.order
