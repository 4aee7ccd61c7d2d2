"""Smoke checks for fields.py against known values (run: python3 _smoke_fields.py)."""
import math

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

# basic lambda fields
assert field_of_lambda(5).degree == 2
assert field_of_lambda(7).degree == 3
assert field_of_lambda(7).pretty() == "Q(lambda_7)"
assert field_of_lambda(5).pretty() == "Q(sqrt(5))"
assert field_of_lambda(8).pretty() == "Q(sqrt(2))"
assert field_of_lambda(12).pretty() == "Q(sqrt(3))"
assert field_of_lambda(INF) == Q
assert field_of_lambda(4) == Q
assert field_of_lambda(18).conductor == 9  # skips 2 mod 4 conductors

# spec examples for the generic generated-field op
g1 = field_generated_by([lam(4), lam(6), lam(14)])
assert g1 == field_of_lambda(14) == field_of_lambda(7)
assert g1.degree == 3
g2 = field_generated_by([lam(4), lam(10), lam(10)])
assert g2 == field_of_lambda(5)
assert g2.pretty() == "Q(sqrt(5))"
assert field_generated_by([]) == Q
assert field_generated_by([CycElement.rational(7)]) == Q

# F/E/D for (2,3,7): F = E = Q(lambda_7) deg 3, D = Q(lambda_7)
t = (2, 3, 7)
assert F_field(t) == field_of_lambda(7)
assert E_field(t) == field_of_lambda(7)
assert D_field(t) == field_of_lambda(7)
assert F_field(t).pretty() == "Q(lambda_7)"

# F/E/D are the generic fields of the defining generators
for tt in [(2, 3, 7), (2, 4, 5), (3, 3, 4), (2, 3, 8), (4, 5, 6), (2, 5, 5)]:
    gens_F = [lam2(s) for s in tt]
    assert field_generated_by(gens_F) == F_field(tt), tt
    gens_D = [lam(s) for s in tt]
    assert field_generated_by(gens_D) == D_field(tt), tt
    prod = gens_F[0] * gens_F[1] * gens_F[2]
    assert field_generated_by(gens_D + [prod]) == E_field(tt), tt

# towers: E subset F with index 1, 2, or 4
for tt in [(2, 3, 7), (2, 4, 5), (2, 3, 8), (4, 5, 6), (3, 5, 6), (7, 9, 11)]:
    F, E = F_field(tt), E_field(tt)
    assert F.contains(E), tt
    assert F.degree % E.degree == 0
    assert F.degree // E.degree in (1, 2, 4), tt

# Frobenius orders
K23 = field_generated_by([lam(8), lam(12)])  # Q(sqrt2, sqrt3)
assert K23.pretty() == "Q(sqrt(2),sqrt(3))"
assert K23.frobenius_order(5) == 2
assert K23.frobenius_order(7) == 2
assert K23.frobenius_order(23) == 1  # 23 = -1 mod 24
assert K23.frobenius_order(47) == 1  # 47 = -1 mod 8 and mod 12
assert field_of_lambda(5).frobenius_order(11) == 1
assert field_of_lambda(5).frobenius_order(2) == 2
try:
    field_of_lambda(5).frobenius_order(5)
    raise SystemExit("ramified prime not caught")
except TridentError as e:
    assert e.code == "ramified"

# fixed field of Frobenius
assert field_of_lambda(5).fixed_field_of_frobenius(2) == Q
assert field_of_lambda(8).fixed_field_of_frobenius(7) == field_of_lambda(8)
assert K23.fixed_field_of_frobenius(5).degree == 2

# splitting criterion examples
assert splits_completely_in_F_over_E((2, 3, 7), 13) is True
assert splits_completely_in_F_over_E((2, 4, 6), 5) is False
assert splits_completely_in_F_over_E((3, 5, 6), 11) is True

# sqrt(p*) fields
assert sqrt_pstar_field(7).pretty() == "Q(sqrt(-7))"
assert sqrt_pstar_field(5).pretty() == "Q(sqrt(5))"
assert sqrt_pstar_field(13).pretty() == "Q(sqrt(13))"
assert sqrt_pstar_field(3).pretty() == "Q(sqrt(-3))"
K = adjoin_sqrt_pstar(field_of_lambda(7), 7)
assert K.degree == 6
try:
    sqrt_pstar_field(2)
    raise SystemExit("p=2 not rejected")
except TridentError as e:
    assert e.code == "invalid_prime"

# prime-to-p parts
assert D_pprime((3, 3, 4), 7) == Q  # lambda_3 = -1 and lambda_4 = 0 are rational
assert D_pprime((2, 3, 8), 7) == field_of_lambda(8)
assert D_pprime((2, 3, 8), 7).pretty() == "Q(sqrt(2))"
assert D_pprime((2, 3, 7), 13) == field_of_lambda(7)
assert D_pprime((2, 3, 7), 7) == Q
assert F_pprime((2, 3, 7), 7) == Q  # lambda_4 = 0, lambda_6 = 1
assert F_pprime((2, 3, 8), 3) == field_of_lambda(16)
assert F_pprime((2, 4, 5), 5).pretty() == "Q(sqrt(2))"
try:
    D_pprime((2, 3, INF), 5)
    raise SystemExit("infinite entry not rejected")
except TridentError as e:
    assert e.code == "infinite_order"

# reference tabulation rows: (triple, p, F, E, D-column) where the D column
# is the prime-to-p part of D fixed by Frobenius at p
rows = [
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
for tt, p, fs, es, ds in rows:
    F, E = F_field(tt), E_field(tt)
    assert F.pretty() == fs, (tt, p, "F", F.pretty(), fs)
    assert E.pretty() == es, (tt, p, "E", E.pretty(), es)
    Dcol = D_pprime(tt, p).fixed_field_of_frobenius(p)
    assert Dcol.pretty() == ds, (tt, p, "D", Dcol.pretty(), ds)

# compositum / lattice sanity
A = field_of_lambda(8)
B = field_of_lambda(12)
C = A.compositum(B)
assert C.contains(A) and C.contains(B)
assert C.degree == 4
assert C == K23

# serialization
d = K23.to_json_dict()
assert d["degree"] == 4 and d["pretty"] == "Q(sqrt(2),sqrt(3))"

print("fields smoke OK")
