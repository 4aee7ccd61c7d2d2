import pytest

from trident.errors import TridentError
from trident.projective import (
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


def test_prime_field_arithmetic():
    F7 = fq_ctx(7, 1)
    assert F7.q == 7 and F7.modulus == (0, 1)
    assert F7.add(3, 5) == 1 and F7.mul(3, 5) == 1 and F7.inv(3) == 5
    assert F7.is_square(2) and not F7.is_square(3)
    assert F7.first_nonsquare() == 3
    assert F7.primitive_element() == 3


def test_extension_field_arithmetic():
    F4 = fq_ctx(2, 2)
    # first irreducible over F_2 of degree 2: x^2 + x + 1
    assert F4.modulus == (1, 1, 1) and F4.q == 4
    assert F4.mul(2, 2) == 3  # x*x = x+1
    assert F4.mul(2, 3) == 1  # x(x+1) = 1
    assert F4.frobenius(2) == 3
    F8 = fq_ctx(2, 3)
    assert F8.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    F9 = fq_ctx(3, 2)
    assert F9.modulus[-1] == 1
    assert sum(1 for x in range(9) if F9.is_square(x)) == 5  # 0 and four squares


def test_subfield_structure():
    F25 = fq_ctx(5, 2)
    assert F25.element_degree(7) == 2 and F25.element_degree(3) == 1
    assert F25.subfield_elements(1) == {0, 1, 2, 3, 4}


def test_large_field_generic_path():
    F = fq_ctx(13, 6)
    x = 123456
    assert F.mul(x, F.inv(x)) == 1
    assert F.pow_el(2, F.q - 1) == 1


def test_group_orders():
    assert psl2_order(7) == 168 and pgl2_order(7) == 336
    assert psl2_order(2) == 6 and psl2_order(3) == 12 and pgl2_order(3) == 24
    assert psl2_order(4) == 60 and psl2_order(5) == 60 and pgl2_order(4) == 60
    assert psl2_order(9) == 360 and pgl2_order(9) == 720
    assert psl2_order(13) == 1092 and pgl2_order(11) == 1320


@pytest.mark.parametrize(
    "q,p,r", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (7, 7, 1), (8, 2, 3), (9, 3, 2)]
)
def test_element_enumeration_counts(q, p, r):
    ctx = fq_ctx(p, r)
    assert len(psl2_elements(ctx)) == psl2_order(q)
    assert len(pgl2_elements(ctx)) == pgl2_order(q)
    assert len(sl2_elements_raw(ctx)) == q * (q * q - 1)


def test_canonicalization():
    F5 = fq_ctx(5, 1)
    assert mat_det(F5, (1, 2, 3, 0)) == F5.neg(F5.mul(2, 3))
    c = canonical_pgl2(F5, (2, 4, 1, 3))
    assert c[0] == 1  # first nonzero entry scaled to 1
    mm = (4, 1, 0, 4)  # det 16 = 1 mod 5
    assert mat_det(F5, mm) == 1
    assert canonical_psl2(F5, mm) == min(mm, (1, 4, 0, 1))


@pytest.mark.parametrize(
    "p,r,kind",
    [
        (3, 1, "PSL2"),
        (3, 1, "PGL2"),
        (2, 2, "PSL2"),
        (5, 1, "PSL2"),
        (5, 1, "PGL2"),
        (7, 1, "PSL2"),
        (7, 1, "PGL2"),
        (2, 3, "PSL2"),
        (3, 2, "PSL2"),
        (3, 2, "PGL2"),
    ],
)
def test_class_census_partitions_group(p, r, kind):
    ctx = fq_ctx(p, r)
    census = class_census(ctx, kind)
    assert sum(census.values()) == group_order(kind, p**r)


def test_class_order_spectra():
    ctx7 = fq_ctx(7, 1)
    assert {cid.order for cid in class_census(ctx7, "PSL2")} == {1, 2, 3, 4, 7}
    assert {cid.order for cid in class_census(ctx7, "PGL2")} == {1, 2, 3, 4, 6, 7, 8}
    ctx13 = fq_ctx(13, 1)
    assert {cid.order for cid in class_census(ctx13, "PSL2")} == {1, 2, 3, 6, 7, 13}
    ctx8 = fq_ctx(2, 3)
    assert {cid.order for cid in class_census(ctx8, "PSL2")} == {1, 2, 3, 7, 9}


def test_unipotent_classes_swapped_by_diagonal_twist():
    ctx7 = fq_ctx(7, 1)
    u1 = conj_class_id(ctx7, "PSL2", (1, 1, 0, 1))
    u2 = conj_class_id(ctx7, "PSL2", (1, 3, 0, 1))
    assert u1.tag == "unipotent" and u2.tag == "unipotent"
    assert u1.uni_class != u2.uni_class
    img = apply_auto(ctx7, "PSL2", (0, True), (1, 1, 0, 1))
    assert conj_class_id(ctx7, "PSL2", img).uni_class == u2.uni_class


def test_element_orders():
    ctx7 = fq_ctx(7, 1)
    assert element_order(ctx7, "PSL2", (1, 1, 0, 1)) == 7
    assert element_order(ctx7, "PSL2", (0, 1, 6, 0)) == 2
    # diag(1,3): eigenratio 3 has multiplicative order 6 mod 7
    assert element_order(ctx7, "PGL2", (1, 0, 0, 3)) == 6


def test_class_rationality_fields():
    ctx7 = fq_ctx(7, 1)
    Kss, Kw = class_rationality(ctx7, conj_class_id(ctx7, "PSL2", (0, 1, 6, 0)))
    assert Kss.pretty() == "Q" and Kw.pretty() == "Q"  # order 2: lambda_2 rational
    Ku, Kuw = class_rationality(ctx7, conj_class_id(ctx7, "PSL2", (1, 1, 0, 1)))
    assert Ku.pretty() == "Q(sqrt(-7))" and Kuw.pretty() == "Q"  # pr = 7 odd
    ctx9 = fq_ctx(3, 2)
    Ku9, Kuw9 = class_rationality(ctx9, conj_class_id(ctx9, "PSL2", (1, 1, 0, 1)))
    assert Ku9.pretty() == "Q" and Kuw9.pretty() == "Q"  # pr = 6 even


def test_semisimple_order7_class_in_psl2_f13():
    ctx13 = fq_ctx(13, 1)
    m13 = next(m for m in psl2_elements(ctx13) if element_order(ctx13, "PSL2", m) == 7)
    K, Kw = class_rationality(ctx13, conj_class_id(ctx13, "PSL2", m13))
    # Frobenius at 13 acts trivially on Q(lambda_7) since 13 = -1 mod 7
    assert K.pretty() == "Q(lambda_7)" and Kw.pretty() == "Q(lambda_7)"


def test_outer_automorphism_counts():
    assert len(outer_reps(fq_ctx(7, 1), "PSL2")) == 2
    assert len(outer_reps(fq_ctx(7, 1), "PGL2")) == 1
    assert len(outer_reps(fq_ctx(3, 2), "PSL2")) == 4
    assert len(outer_reps(fq_ctx(2, 3), "PSL2")) == 3


def test_autos_are_homomorphisms():
    ctx9 = fq_ctx(3, 2)
    elems9 = psl2_elements(ctx9)
    a, b = elems9[17], elems9[101]
    for rep in outer_reps(ctx9, "PSL2"):
        lhs = apply_auto(ctx9, "PSL2", rep, canonical(ctx9, "PSL2", mat_mul(ctx9, a, b)))
        rhs = canonical(
            ctx9,
            "PSL2",
            mat_mul(ctx9, apply_auto(ctx9, "PSL2", rep, a), apply_auto(ctx9, "PSL2", rep, b)),
        )
        assert lhs == rhs


def test_pgl2_to_psl2_quadratic():
    big, img = pgl2_to_psl2_quadratic(fq_ctx(3, 1), (1, 0, 0, 2))
    assert big.q == 9 and mat_det(big, img) == 1


def test_subfield_embedding_is_field_hom():
    small, big = fq_ctx(3, 1), fq_ctx(3, 2)
    emb = subfield_embedding(small, big)
    for x in range(3):
        for y in range(3):
            assert emb((x + y) % 3) == big.add(emb(x), emb(y))
            assert emb((x * y) % 3) == big.mul(emb(x), emb(y))


def test_group_table_and_closure():
    ctx7 = fq_ctx(7, 1)
    elems, index, table = group_table(ctx7, "PSL2")
    assert len(elems) == 168
    e = identity_index(ctx7, "PSL2")
    assert elems[e] == canonical(ctx7, "PSL2", mat_identity(ctx7))
    i, j = 23, 145
    assert elems[table[i, j]] == canonical(ctx7, "PSL2", mat_mul(ctx7, elems[i], elems[j]))
    gi = index[canonical(ctx7, "PSL2", (1, 1, 0, 1))]
    gj = index[canonical(ctx7, "PSL2", (0, 1, 6, 0))]
    assert len(closure(table, [gi, gj], e)) == 168  # two standard generators
    assert len(closure(table, [gi], e)) == 7  # cyclic unipotent subgroup


def test_mat_inv():
    ctx7 = fq_ctx(7, 1)
    m = (1, 2, 3, 0)
    assert mat_mul(ctx7, m, mat_inv(ctx7, m)) == mat_identity(ctx7)


def test_group_table_scale():
    elems13, _, table13 = group_table(fq_ctx(13, 1), "PSL2")
    assert len(elems13) == 1092 and table13.shape == (1092, 1092)


def test_group_elements_dispatch():
    ctx = fq_ctx(5, 1)
    assert group_elements(ctx, "PSL2") == psl2_elements(ctx)
    assert group_elements(ctx, "PGL2") == pgl2_elements(ctx)


def test_enumeration_guard(monkeypatch):
    monkeypatch.setenv("TRIDENT_MAX_Q", "8")
    with pytest.raises(TridentError) as ei:
        psl2_elements(fq_ctx(3, 2))
    assert ei.value.code == "guard_exceeded"
