from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import cyclotomic_poly, Poly
from sympy.abc import x as _x

from trident.cyclotomic import (
    INF,
    CycElement,
    cyclotomic_polynomial,
    lam,
    lam2,
    phi,
    same_value,
    zeta,
)
from trident.errors import TridentError


def test_cyclotomic_polynomial_known():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(105)[7] == -2  # first coefficient outside {0,+-1}


@pytest.mark.parametrize("n", list(range(1, 130)) + [256, 360, 4095, 24360])
def test_cyclotomic_polynomial_vs_sympy(n):
    got = cyclotomic_polynomial(n)
    want = tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, _x), _x).all_coeffs()))
    assert got == want
    assert len(got) == phi(n) + 1


def test_cyclotomic_polynomial_rejects_bad_conductor():
    for bad in (0, -3):
        with pytest.raises(TridentError) as ei:
            cyclotomic_polynomial(bad)
        assert ei.value.code == "invalid_conductor"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 7, 8, 9, 12, 16, 30])
def test_zeta_is_primitive_root(n):
    z = zeta(n)
    assert (z ** n).as_rational() == 1
    if n > 1:
        for k in range(1, n):
            if (z ** k).is_rational() and (z ** k).as_rational() == 1:
                pytest.fail(f"zeta_{n}^{k} = 1")


def test_rational_constructor_and_arithmetic():
    a = CycElement.rational(Fraction(2, 3))
    b = CycElement.rational(5)
    assert (a + b).as_rational() == Fraction(17, 3)
    assert (a * b).as_rational() == Fraction(10, 3)
    assert (a - 1).as_rational() == Fraction(-1, 3)
    assert (2 - a).as_rational() == Fraction(4, 3)
    assert (a / b).as_rational() == Fraction(2, 15)
    assert (-a).as_rational() == Fraction(-2, 3)


def test_lam_known_values():
    assert lam(2).as_rational() == -2
    assert lam(3).as_rational() == -1
    assert lam(4).as_rational() == 0
    assert lam(6).as_rational() == 1
    assert lam(INF).as_rational() == 2
    assert lam2(INF).as_rational() == 2
    assert lam2(3) == lam(6)
    # lam(5) = (sqrt(5)-1)/2 has minimal polynomial x^2 + x - 1
    assert lam(5).minimal_polynomial() == (-1, 1, 1)
    # lam(7) has minimal polynomial x^3 + x^2 - 2x - 1
    assert lam(7).minimal_polynomial() == (-1, -2, 1, 1)
    # lam2(4) = sqrt(2)
    assert lam2(4).minimal_polynomial() == (-2, 0, 1)


@given(st.integers(min_value=2, max_value=48))
@settings(max_examples=60, deadline=None)
def test_half_angle_identity(s):
    # lambda_(2s)^2 = lambda_s + 2
    assert same_value(lam2(s) * lam2(s), lam(s) + 2)


@given(st.integers(min_value=2, max_value=30), st.integers(min_value=2, max_value=30))
@settings(max_examples=40, deadline=None)
def test_lam_product_commutes_and_embeds(s, t):
    p1 = lam(s) * lam(t)
    p2 = lam(t) * lam(s)
    assert same_value(p1, p2)


def test_embed_requires_divisibility():
    e = lam(5)
    up = e.embed(15)
    assert up.conductor == 15 and same_value(up, e)
    with pytest.raises(TridentError) as ei:
        e.embed(7)
    assert ei.value.code == "incompatible_conductors"


def test_from_sparse_folds_exponents():
    # zeta_5^7 = zeta_5^2
    a = CycElement.from_sparse(5, {7: Fraction(1)})
    b = zeta(5) ** 2
    assert a == b


@given(
    st.integers(min_value=1, max_value=16),
    st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=8),
)
@settings(max_examples=60, deadline=None)
def test_inverse_property(n, coeffs):
    terms = {e: Fraction(c) for e, c in enumerate(coeffs) if c}
    if not terms:
        return
    el = CycElement.from_sparse(n, terms)
    if el.is_zero():
        return
    prod = el * el.inverse()
    assert prod.is_rational() and prod.as_rational() == 1


def test_division_by_zero():
    with pytest.raises(TridentError) as ei:
        lam(5) / CycElement.rational(0)
    assert ei.value.code == "division_by_zero"
    with pytest.raises(TridentError):
        CycElement.rational(0).inverse()


def test_galois_action():
    z = zeta(7)
    img = z.galois_apply(3)
    assert img == z ** 3
    with pytest.raises(TridentError):
        z.galois_apply(7)
    # lam(7) is fixed by complex conjugation (k = -1 acts as k = 6)
    l7 = lam(7)
    assert l7.galois_apply(6) == l7
    assert len(l7.galois_orbit()) == 3


def test_minimal_polynomial_of_zeta():
    assert zeta(5).minimal_polynomial() == (1, 1, 1, 1, 1)
    assert zeta(8).minimal_polynomial() == (1, 0, 0, 0, 1)


def test_serialization_roundtrip():
    el = lam(7) + lam2(4) / 3
    d = el.to_json_dict()
    assert set(d) == {"conductor", "coeffs"}
    back = CycElement.from_json_dict(d)
    assert back == el


def test_same_value_across_conductors():
    assert same_value(lam(3), CycElement.rational(-1))
    assert same_value(lam(6).embed(12), lam(6))
    assert not same_value(lam(5), lam(7))
