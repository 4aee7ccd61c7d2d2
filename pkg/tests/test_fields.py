from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from trident.cyclotomic import INF, CycElement, lam, lam2
from trident.errors import TridentError
from trident.fields import (
    AbelianField,
    D_field,
    D_pprime,
    E_field,
    F_field,
    F_pprime,
    adjoin_sqrt_pstar,
    field_generated_by,
    field_of_lambda,
    splits_completely_in_F_over_E,
    sqrt_pstar_field,
)

Q = AbelianField.rationals()


def test_field_of_lambda_basic():
    assert field_of_lambda(5).degree == 2
    assert field_of_lambda(7).degree == 3
    assert field_of_lambda(7).pretty() == "Q(lambda_7)"
    assert field_of_lambda(5).pretty() == "Q(sqrt(5))"
    assert field_of_lambda(8).pretty() == "Q(sqrt(2))"
    assert field_of_lambda(12).pretty() == "Q(sqrt(3))"
    assert field_of_lambda(INF) == Q
    assert field_of_lambda(4) == Q
    assert field_of_lambda(18).conductor == 9  # skips 2 mod 4 conductors


def test_field_generated_by_examples():
    g1 = field_generated_by([lam(4), lam(6), lam(14)])
    assert g1 == field_of_lambda(14) == field_of_lambda(7)
    assert g1.degree == 3
    g2 = field_generated_by([lam(4), lam(10), lam(10)])
    assert g2 == field_of_lambda(5)
    assert g2.pretty() == "Q(sqrt(5))"
    assert field_generated_by([]) == Q
    assert field_generated_by([CycElement.rational(7)]) == Q


def test_fields_of_237():
    t = (2, 3, 7)
    assert F_field(t) == field_of_lambda(7)
    assert E_field(t) == field_of_lambda(7)
    assert D_field(t) == field_of_lambda(7)
    assert F_field(t).pretty() == "Q(lambda_7)"


@pytest.mark.parametrize("t", [(2, 3, 7), (2, 4, 5), (3, 3, 4), (2, 3, 8), (4, 5, 6), (2, 5, 5)])
def test_fields_match_generic_generated_fields(t):
    gens_F = [lam2(s) for s in t]
    assert field_generated_by(gens_F) == F_field(t)
    gens_D = [lam(s) for s in t]
    assert field_generated_by(gens_D) == D_field(t)
    prod = gens_F[0] * gens_F[1] * gens_F[2]
    assert field_generated_by(gens_D + [prod]) == E_field(t)


@pytest.mark.parametrize("t", [(2, 3, 7), (2, 4, 5), (2, 3, 8), (4, 5, 6), (3, 5, 6), (7, 9, 11)])
def test_tower_index(t):
    F, E = F_field(t), E_field(t)
    assert F.contains(E)
    assert F.degree % E.degree == 0
    assert F.degree // E.degree in (1, 2, 4)


@given(st.tuples(*(st.integers(min_value=2, max_value=30),) * 3))
@settings(max_examples=80, deadline=None)
def test_tower_index_random(t):
    assume(Fraction(1, t[0]) + Fraction(1, t[1]) + Fraction(1, t[2]) < 1)
    F, E = F_field(t), E_field(t)
    assert F.contains(E)
    assert F.degree // E.degree in (1, 2, 4)
    # both fields are permutation invariants of the triple
    assert F_field((t[2], t[0], t[1])) == F
    assert E_field((t[1], t[0], t[2])) == E


def test_frobenius_orders():
    K23 = field_generated_by([lam(8), lam(12)])  # Q(sqrt2, sqrt3)
    assert K23.pretty() == "Q(sqrt(2),sqrt(3))"
    assert K23.frobenius_order(5) == 2
    assert K23.frobenius_order(7) == 2
    assert K23.frobenius_order(23) == 1  # 23 = -1 mod 24
    assert K23.frobenius_order(47) == 1  # 47 = -1 mod 8 and mod 12
    assert field_of_lambda(5).frobenius_order(11) == 1
    assert field_of_lambda(5).frobenius_order(2) == 2
    with pytest.raises(TridentError) as ei:
        field_of_lambda(5).frobenius_order(5)
    assert ei.value.code == "ramified"


def test_fixed_field_of_frobenius():
    assert field_of_lambda(5).fixed_field_of_frobenius(2) == Q
    assert field_of_lambda(8).fixed_field_of_frobenius(7) == field_of_lambda(8)
    K23 = field_of_lambda(8).compositum(field_of_lambda(12))
    assert K23.fixed_field_of_frobenius(5).degree == 2


def test_splitting_criterion():
    assert splits_completely_in_F_over_E((2, 3, 7), 13) is True
    assert splits_completely_in_F_over_E((2, 4, 6), 5) is False
    assert splits_completely_in_F_over_E((3, 5, 6), 11) is True


def test_sqrt_pstar():
    assert sqrt_pstar_field(7).pretty() == "Q(sqrt(-7))"
    assert sqrt_pstar_field(5).pretty() == "Q(sqrt(5))"
    assert sqrt_pstar_field(13).pretty() == "Q(sqrt(13))"
    assert sqrt_pstar_field(3).pretty() == "Q(sqrt(-3))"
    assert adjoin_sqrt_pstar(field_of_lambda(7), 7).degree == 6
    with pytest.raises(TridentError) as ei:
        sqrt_pstar_field(2)
    assert ei.value.code == "invalid_prime"


def test_prime_to_p_parts():
    assert D_pprime((3, 3, 4), 7) == Q  # lambda_3 = -1 and lambda_4 = 0 are rational
    assert D_pprime((2, 3, 8), 7) == field_of_lambda(8)
    assert D_pprime((2, 3, 8), 7).pretty() == "Q(sqrt(2))"
    assert D_pprime((2, 3, 7), 13) == field_of_lambda(7)
    assert D_pprime((2, 3, 7), 7) == Q
    assert F_pprime((2, 3, 7), 7) == Q  # lambda_4 = 0, lambda_6 = 1
    assert F_pprime((2, 3, 8), 3) == field_of_lambda(16)
    assert F_pprime((2, 4, 5), 5).pretty() == "Q(sqrt(2))"
    with pytest.raises(TridentError) as ei:
        D_pprime((2, 3, INF), 5)
    assert ei.value.code == "infinite_order"


# reference tabulation rows: (triple, p, F, E, D-column) where the D column is
# the prime-to-p part of D fixed by Frobenius at p
TABLE_FIELD_ROWS = [
    ((2, 3, 7), 7, "Q(lambda_7)", "Q(lambda_7)", "Q"),
    ((3, 4, 4), 3, "Q(sqrt(2))", "Q", "Q"),
    ((2, 4, 5), 5, "Q(sqrt(2),sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 5, 5), 2, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 5, 5), 5, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((3, 3, 5), 2, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((3, 3, 5), 5, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 4, 6), 5, "Q(sqrt(2),sqrt(3))", "Q", "Q"),
    ((2, 3, 7), 2, "Q(lambda_7)", "Q(lambda_7)", "Q"),
    ((2, 3, 8), 7, "Q(lambda_16)", "Q(sqrt(2))", "Q(sqrt(2))"),
    ((3, 3, 4), 7, "Q(sqrt(2))", "Q(sqrt(2))", "Q"),
    ((2, 5, 6), 5, "Q(sqrt(3),sqrt(5))", "Q(sqrt(5))", "Q"),
    ((3, 5, 5), 2, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((3, 5, 5), 5, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 4, 5), 3, "Q(sqrt(2),sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 4, 7), 7, "Q(lambda_7,sqrt(2))", "Q(lambda_7)", "Q"),
    ((2, 6, 6), 5, "Q(sqrt(3))", "Q", "Q"),
    ((3, 4, 4), 5, "Q(sqrt(2))", "Q", "Q"),
    ((5, 5, 5), 2, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((5, 5, 5), 5, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((2, 3, 7), 13, "Q(lambda_7)", "Q(lambda_7)", "Q(lambda_7)"),
    ((2, 3, 9), 2, "Q(lambda_9)", "Q(lambda_9)", "Q"),
    ((2, 4, 6), 7, "Q(sqrt(2),sqrt(3))", "Q", "Q"),
    ((3, 4, 4), 7, "Q(sqrt(2))", "Q", "Q"),
    ((2, 3, 8), 3, "Q(lambda_16)", "Q(sqrt(2))", "Q"),
    ((3, 3, 4), 3, "Q(sqrt(2))", "Q(sqrt(2))", "Q"),
    ((3, 4, 6), 5, "Q(sqrt(2),sqrt(3))", "Q(sqrt(6))", "Q"),
    ((3, 3, 7), 7, "Q(lambda_7)", "Q(lambda_7)", "Q"),
    ((2, 7, 7), 7, "Q(lambda_7)", "Q(lambda_7)", "Q"),
    ((2, 5, 5), 3, "Q(sqrt(5))", "Q(sqrt(5))", "Q"),
    ((4, 4, 5), 5, "Q(sqrt(2),sqrt(5))", "Q(sqrt(5))", "Q"),
    ((3, 6, 6), 5, "Q(sqrt(3))", "Q", "Q"),
    ((2, 4, 8), 7, "Q(lambda_16)", "Q(sqrt(2))", "Q(sqrt(2))"),
    ((4, 4, 4), 7, "Q(sqrt(2))", "Q(sqrt(2))", "Q"),
    ((3, 4, 7), 7, "Q(lambda_7,sqrt(2))", "Q(lambda_7,sqrt(2))", "Q"),
    ((4, 5, 6), 5, "Q(sqrt(2),sqrt(3),sqrt(5))", "Q(sqrt(5),sqrt(6))", "Q"),
]


@pytest.mark.parametrize("t,p,fs,es,ds", TABLE_FIELD_ROWS)
def test_reference_tabulation_field_columns(t, p, fs, es, ds):
    assert F_field(t).pretty() == fs
    assert E_field(t).pretty() == es
    assert D_pprime(t, p).fixed_field_of_frobenius(p).pretty() == ds


def test_compositum_lattice():
    A = field_of_lambda(8)
    B = field_of_lambda(12)
    C = A.compositum(B)
    assert C.contains(A) and C.contains(B)
    assert C.degree == 4
    assert C == field_generated_by([lam(8), lam(12)])


def test_serialization():
    K = field_generated_by([lam(8), lam(12)])
    d = K.to_json_dict()
    assert d["degree"] == 4 and d["pretty"] == "Q(sqrt(2),sqrt(3))"
