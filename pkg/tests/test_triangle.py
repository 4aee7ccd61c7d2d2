from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trident.cyclotomic import INF, lam, same_value
from trident.errors import TridentError
from trident.triangle import (
    abelianization,
    admissible_prime,
    beta,
    chi,
    classify_triple,
    genus_from_order,
    is_hyperbolic,
    is_maximal,
    is_perfect,
    is_special_shape,
    validate_triple,
)


def test_validate_triple_rejects_garbage():
    for bad in [(2, 3), (2, 3, 7, 11), (1, 3, 7), (2, 0, 5), (2, -3, 7)]:
        with pytest.raises(TridentError) as ei:
            validate_triple(bad)
        assert ei.value.code == "invalid_triple"
    validate_triple((2, 3, INF))
    validate_triple((INF, INF, INF))


def test_chi_and_classification():
    assert chi((2, 3, 7)) == Fraction(-1, 42)
    assert chi((2, 3, 6)) == 0
    assert chi((2, 3, 5)) == Fraction(1, 30)
    assert classify_triple((2, 3, 7)) == "hyperbolic"
    assert classify_triple((2, 4, 4)) == "euclidean"
    assert classify_triple((2, 3, 3)) == "spherical"
    assert classify_triple((2, 3, INF)) == "hyperbolic"
    assert is_hyperbolic((3, 3, 4)) and not is_hyperbolic((3, 3, 3))


@given(st.tuples(*(st.integers(min_value=2, max_value=60),) * 3))
@settings(max_examples=200, deadline=None)
def test_chi_is_symmetric(t):
    assert chi(t) == chi((t[2], t[0], t[1])) == chi((t[1], t[0], t[2]))
    assert is_hyperbolic(t) == (chi(t) < 0)


@pytest.mark.parametrize(
    "t,ab",
    [
        ((2, 3, 7), ()),
        ((2, 3, 8), (2,)),
        ((2, 4, 6), (2, 2)),
        ((4, 4, 4), (4, 4)),
        ((2, 3, INF), (6,)),
        ((INF, INF, INF), (0, 0)),
        ((2, INF, INF), (2, 0)),
    ],
)
def test_abelianization(t, ab):
    assert abelianization(t) == ab


def test_perfect_triples():
    assert is_perfect((2, 3, 7))
    assert is_perfect((2, 3, 13))
    assert not is_perfect((2, 3, 8))
    assert not is_perfect((2, 4, 5))


@given(st.tuples(*(st.integers(min_value=2, max_value=40),) * 3))
@settings(max_examples=150, deadline=None)
def test_perfect_iff_pairwise_coprime_style(t):
    # the quotient Z^3 / <(a,0),(0,b),(c,c)> is trivial iff the three
    # pairwise gcd conditions force it; cross-check against a direct
    # determinant computation of the relation lattice
    import math

    a, b, c = t
    order = abs(a * b * c - 0)  # index of the relation lattice in Z^2 * lcm factor
    ab = abelianization(t)
    got = 1
    for d in ab:
        got *= d
    # the abelianization is trivial exactly when all invariant factors vanish
    assert (got == 1 and ab == ()) == (
        math.gcd(a, b) == 1 and math.gcd(a, c) == 1 and math.gcd(b, c) == 1
    )


@pytest.mark.parametrize(
    "t,expect",
    [
        ((2, 3, 7), True),
        ((3, 3, 4), False),
        ((2, 4, 8), False),
        ((3, 4, 12), False),
        ((2, 5, 5), False),
        ((7, 7, 7), False),
        ((2, 4, 5), True),
        ((3, 5, 6), True),
        ((2, 3, INF), True),
        ((2, INF, INF), False),
    ],
)
def test_is_maximal(t, expect):
    assert is_maximal(t) is expect


def test_is_maximal_requires_hyperbolic():
    with pytest.raises(TridentError) as ei:
        is_maximal((2, 3, 3))
    assert ei.value.code == "non_hyperbolic"


@pytest.mark.parametrize(
    "t,expect",
    [
        ((2, 3, 6), True),  # m=1, k=2
        ((2, 4, 4), True),  # m=2, k=1
        ((3, 4, 12), True),
        ((4, 6, 12), True),
        ((2, 3, 7), False),
        ((4, 5, 20), True),  # m=1, k=4
        ((3, 5, 15), False),
        ((2, 3, 5), False),
    ],
)
def test_is_special_shape(t, expect):
    assert is_special_shape(t) is expect


def test_special_shapes_never_all_odd():
    # {mk, m(k+1), mk(k+1)} always contains an even entry since k and k+1
    # have opposite parity
    for a in range(2, 31):
        for b in range(a, 31):
            for c in range(b, 31):
                if is_special_shape((a, b, c)):
                    assert a % 2 == 0 or b % 2 == 0 or c % 2 == 0


def test_genus_from_order():
    assert genus_from_order((2, 3, 7), 168) == 3
    assert genus_from_order((2, 3, 7), 1092) == 14
    with pytest.raises(TridentError) as ei:
        genus_from_order((2, 3, 7), 100)
    assert ei.value.code == "inconsistent_ramification"
    with pytest.raises(TridentError) as ei:
        genus_from_order((2, 3, 5), 120)  # negative genus
    assert ei.value.code == "inconsistent_ramification"


def test_beta_closed_forms():
    # beta internally computes both closed forms and asserts they agree
    assert same_value(beta((2, 3, 7)), lam(7) - 1)
    assert same_value(beta((2, 3, 8)), lam(8) - 1)
    b = beta((3, 4, 5))
    assert not b.is_zero()


@given(st.tuples(*(st.integers(min_value=2, max_value=24),) * 3))
@settings(max_examples=60, deadline=None)
def test_beta_symmetric(t):
    if not is_hyperbolic(t):
        return
    assert same_value(beta(t), beta((t[1], t[2], t[0])))


def test_admissible_prime():
    r = admissible_prime((2, 3, 7), 13)
    assert r.status == "admissible" and r.ok
    r = admissible_prime((2, 3, 7), 7)
    assert r.status == "inadmissible" and r.reason == "divides_orders" and not r.ok
    r = admissible_prime((5, 5, 5), 2)
    assert r.status == "admissible_at_2" and r.ok
    r = admissible_prime((2, 5, 5), 2)
    assert r.status == "inadmissible" and r.reason == "divides_orders"
    with pytest.raises(TridentError) as ei:
        admissible_prime((2, 3, 7), 6)
    assert ei.value.code == "invalid_prime"
    # infinite entries are never divided by p
    r = admissible_prime((2, 3, INF), 5)
    assert r.ok
