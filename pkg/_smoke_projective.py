"""Smoke checks for projective.py (run: python3 _smoke_projective.py)."""
import numpy as np

from trident.errors import TridentError
from trident.projective import (
    ConjClassId,
    apply_auto,
    canonical,
    canonical_pgl2,
    canonical_psl2,
    class_census,
    class_rationality,
    closure,
    conj_class_id,
    element_order,
    fq_ctx,
    group_elements,
    group_order,
    group_table,
    identity_index,
    mat_det,
    mat_identity,
    mat_inv,
    mat_mul,
    outer_reps,
    pgl2_elements,
    pgl2_order,
    pgl2_to_psl2_quadratic,
    psl2_elements,
    psl2_order,
    sl2_elements_raw,
    subfield_embedding,
)

# field construction and arithmetic
F7 = fq_ctx(7, 1)
assert F7.q == 7 and F7.modulus == (0, 1)
assert F7.add(3, 5) == 1 and F7.mul(3, 5) == 1 and F7.inv(3) == 5
assert F7.is_square(2) and not F7.is_square(3)
assert F7.first_nonsquare() == 3
assert F7.primitive_element() == 3

F4 = fq_ctx(2, 2)
# first irreducible over F_2 of degree 2: x^2 + x + 1 (encoding: body 0,1,2 -> 3)
assert F4.modulus == (1, 1, 1)
assert F4.q == 4
assert F4.mul(2, 2) == 3  # x*x = x+1
assert F4.mul(2, 3) == 1  # x(x+1) = 1
assert F4.frobenius(2) == 3

F8 = fq_ctx(2, 3)
assert F8.modulus == (1, 1, 0, 1)  # x^3 + x + 1
F9 = fq_ctx(3, 2)
assert F9.modulus == (1, 0, 1) or F9.modulus[-1] == 1
assert sum(1 for x in range(9) if F9.is_square(x)) == 5  # 0 and four squares

F25 = fq_ctx(5, 2)
assert F25.element_degree(7) == 2 and F25.element_degree(3) == 1
assert F25.subfield_elements(1) == {0, 1, 2, 3, 4}

# big-field generic path
F13_6 = fq_ctx(13, 6)
x = 123456
y = F13_6.inv(x)
assert F13_6.mul(x, y) == 1
assert F13_6.pow_el(2, F13_6.q - 1) == 1

# group orders
assert psl2_order(7) == 168 and pgl2_order(7) == 336
assert psl2_order(2) == 6 and psl2_order(3) == 12 and pgl2_order(3) == 24
assert psl2_order(4) == 60 and psl2_order(5) == 60 and pgl2_order(4) == 60
assert psl2_order(9) == 360 and pgl2_order(9) == 720
assert psl2_order(13) == 1092 and pgl2_order(11) == 1320

# element enumeration
for q, p, r in [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (7, 7, 1), (8, 2, 3), (9, 3, 2)]:
    ctx = fq_ctx(p, r)
    assert len(psl2_elements(ctx)) == psl2_order(q), q
    assert len(pgl2_elements(ctx)) == pgl2_order(q), q
    assert len(sl2_elements_raw(ctx)) == q * (q * q - 1), q

# canonicalization
m = (1, 2, 3, 0)
F5 = fq_ctx(5, 1)
assert mat_det(F5, m) == F5.neg(F5.mul(2, 3))
c = canonical_pgl2(F5, (2, 4, 1, 3))
assert c[0] == 1
mm = (4, 1, 0, 4)  # det 16 = 1 mod 5
assert mat_det(F5, mm) == 1
assert canonical_psl2(F5, mm) == min(mm, (1, 4, 0, 1))

# class censuses with verification built in
for q, p, r, kind in [
    (3, 3, 1, "PSL2"), (3, 3, 1, "PGL2"),
    (4, 2, 2, "PSL2"), (5, 5, 1, "PSL2"), (5, 5, 1, "PGL2"),
    (7, 7, 1, "PSL2"), (7, 7, 1, "PGL2"),
    (8, 2, 3, "PSL2"), (9, 3, 2, "PSL2"), (9, 3, 2, "PGL2"),
]:
    ctx = fq_ctx(p, r)
    census = class_census(ctx, kind)
    assert sum(census.values()) == group_order(kind, q), (q, kind)

# PSL2(F_7): orders present should be {1, 2, 3, 4, 7}
ctx7 = fq_ctx(7, 1)
orders7 = {cid.order for cid in class_census(ctx7, "PSL2")}
assert orders7 == {1, 2, 3, 4, 7}
# PGL2(F_7): orders {1, 2, 3, 4, 6, 7, 8}
orders7g = {cid.order for cid in class_census(ctx7, "PGL2")}
assert orders7g == {1, 2, 3, 4, 6, 7, 8}
# PSL2(F_13): orders {1, 2, 3, 6, 7, 13}
ctx13 = fq_ctx(13, 1)
orders13 = {cid.order for cid in class_census(ctx13, "PSL2")}
assert orders13 == {1, 2, 3, 6, 7, 13}
# PSL2(F_8): orders {1, 2, 3, 7, 9}
ctx8 = fq_ctx(2, 3)
orders8 = {cid.order for cid in class_census(ctx8, "PSL2")}
assert orders8 == {1, 2, 3, 7, 9}

# unipotent classes: two in PSL2 odd q, swapped by the diagonal twist
u1 = conj_class_id(ctx7, "PSL2", (1, 1, 0, 1))
u2 = conj_class_id(ctx7, "PSL2", (1, 3, 0, 1))
assert u1.tag == "unipotent" and u2.tag == "unipotent"
assert u1.uni_class != u2.uni_class
tw = (0, True)
img = apply_auto(ctx7, "PSL2", tw, (1, 1, 0, 1))
assert conj_class_id(ctx7, "PSL2", img).uni_class == u2.uni_class

# element orders
assert element_order(ctx7, "PSL2", (1, 1, 0, 1)) == 7
assert element_order(ctx7, "PSL2", (0, 1, 6, 0)) == 2
# diag(1,3) in PGL2: eigenratio 3, ord(3 mod 7) = 6: projective order 6
assert element_order(ctx7, "PGL2", (1, 0, 0, 3)) == 6

# rationality fields
Kss, Kw = class_rationality(ctx7, conj_class_id(ctx7, "PSL2", (0, 1, 6, 0)))
assert Kss.pretty() == "Q" and Kw.pretty() == "Q"  # order 2: lambda_2 = -2 rational
uni_cls = conj_class_id(ctx7, "PSL2", (1, 1, 0, 1))
Ku, Kuw = class_rationality(ctx7, uni_cls)
assert Ku.pretty() == "Q(sqrt(-7))" and Kuw.pretty() == "Q"  # pr = 7 odd
ctx9 = fq_ctx(3, 2)
Ku9, Kuw9 = class_rationality(ctx9, conj_class_id(ctx9, "PSL2", (1, 1, 0, 1)))
assert Ku9.pretty() == "Q" and Kuw9.pretty() == "Q"  # pr = 6 even

# order-7 class in PSL2(F_7): unipotent; order-7 in PSL2(F_13): semisimple,
# rationality Q(lambda_7), weak field fixed by Frob_13 = all of Q(lambda_7)
m13 = None
for mm in psl2_elements(ctx13):
    if element_order(ctx13, "PSL2", mm) == 7:
        m13 = mm
        break
cid13 = conj_class_id(ctx13, "PSL2", m13)
K13, K13w = class_rationality(ctx13, cid13)
assert K13.pretty() == "Q(lambda_7)" and K13w.pretty() == "Q(lambda_7)"

# outer automorphism counts
assert len(outer_reps(ctx7, "PSL2")) == 2
assert len(outer_reps(ctx7, "PGL2")) == 1
assert len(outer_reps(ctx9, "PSL2")) == 4
assert len(outer_reps(ctx8, "PSL2")) == 3

# autos are homomorphisms fixing class structure sizes
elems9 = psl2_elements(ctx9)
for rep in outer_reps(ctx9, "PSL2"):
    a, b = elems9[17], elems9[101]
    lhs = apply_auto(ctx9, "PSL2", rep, canonical(ctx9, "PSL2", mat_mul(ctx9, a, b)))
    rhs = canonical(
        ctx9, "PSL2",
        mat_mul(ctx9, apply_auto(ctx9, "PSL2", rep, a), apply_auto(ctx9, "PSL2", rep, b)),
    )
    assert lhs == rhs

# PGL2 -> PSL2 over the quadratic extension
big, img4 = pgl2_to_psl2_quadratic(fq_ctx(3, 1), (1, 0, 0, 2))
assert big.q == 9 and mat_det(big, img4) == 1

# subfield embedding is a field homomorphism
emb = subfield_embedding(fq_ctx(3, 1), fq_ctx(3, 2))
for x in range(3):
    for y in range(3):
        assert emb((x + y) % 3) == fq_ctx(3, 2).add(emb(x), emb(y))
        assert emb((x * y) % 3) == fq_ctx(3, 2).mul(emb(x), emb(y))

# multiplication table + closure
elems, index, table = group_table(ctx7, "PSL2")
assert len(elems) == 168
e = identity_index(ctx7, "PSL2")
assert elems[e] == canonical(ctx7, "PSL2", mat_identity(ctx7))
# table consistency spot check
i, j = 23, 145
assert elems[table[i, j]] == canonical(ctx7, "PSL2", mat_mul(ctx7, elems[i], elems[j]))
# closure of the whole group from two standard generators
gi = index[canonical(ctx7, "PSL2", (1, 1, 0, 1))]
gj = index[canonical(ctx7, "PSL2", (0, 1, 6, 0))]
sub = closure(table, [gi, gj], e)
assert len(sub) == 168
# a proper subgroup: <unipotent> has order 7
sub2 = closure(table, [gi], e)
assert len(sub2) == 7

# inverse sanity
minv = mat_inv(ctx7, (1, 2, 3, 0))
assert mat_mul(ctx7, (1, 2, 3, 0), minv) == mat_identity(ctx7)

# PSL2(F_13) table scale check
elems13, _, table13 = group_table(ctx13, "PSL2")
assert len(elems13) == 1092 and table13.shape == (1092, 1092)

# guard behavior
import os
os.environ["TRIDENT_MAX_Q"] = "8"
try:
    psl2_elements(fq_ctx(3, 2))
    raise SystemExit("guard not enforced")
except TridentError as err:
    assert err.code == "guard_exceeded"
finally:
    del os.environ["TRIDENT_MAX_Q"]

print("projective smoke OK")
