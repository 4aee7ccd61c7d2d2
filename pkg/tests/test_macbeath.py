import random

import pytest

from trident._tabledata import q7_family_classification
from trident.errors import TridentError
from trident.macbeath import (
    class_triples_with_orders,
    classify,
    classify_up_to_signs,
    construct_triple,
    dform,
    dform_disagreements,
    even_sign_lifts,
    is_commutative,
    is_commutative_oracle,
    is_exceptional_order_triple,
    is_irregular,
    macbeath_census,
    orbit_counts_oracle,
    orbit_counts_theoretical,
    order_triple,
    sign_class_rep,
    sl2_class_reps_with_trace,
    subgroup_oracle,
    trace_bucket,
    witnesses_reduced,
)
from trident.projective import fq_ctx, mat_inv, mat_mul

F2 = fq_ctx(2, 1)
F3 = fq_ctx(3, 1)
F4 = fq_ctx(2, 2)
F5 = fq_ctx(5, 1)
F7 = fq_ctx(7, 1)
F8 = fq_ctx(2, 3)
F9 = fq_ctx(3, 2)
F13 = fq_ctx(13, 1)


def test_trace_buckets_partition_sl2():
    for ctx in (F7, F9):
        total = sum(len(trace_bucket(ctx, tau)) for tau in range(ctx.q))
        assert total == ctx.q * (ctx.q * ctx.q - 1)


def test_class_rep_counts():
    assert len(sl2_class_reps_with_trace(F7, 2)) == 3  # central + two unipotent
    assert len(sl2_class_reps_with_trace(F7, 5)) == 3
    assert len(sl2_class_reps_with_trace(F7, 1)) == 1
    assert len(sl2_class_reps_with_trace(F2, 0)) == 2
    assert len(sl2_class_reps_with_trace(F4, 1)) == 1


def test_dform_values():
    assert dform(F7, (0, 1, 2)) == (0 + 1 + 4 - 0 - 4) % 7
    assert dform(F7, (2, 2, 2)) == 0
    assert dform(F7, (0, 0, 0)) == 3  # -4 mod 7
    assert dform(F7, (2, 0, 0)) == 0
    assert dform(F7, (1, 1, 2)) == 0


@pytest.mark.parametrize("ctx", [F2, F3, F4, F5], ids=lambda c: f"q{c.q}")
def test_commutativity_closed_form_vs_oracle(ctx):
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                t = (t1, t2, t3)
                assert is_commutative(ctx, t) == is_commutative_oracle(ctx, t), t


def test_dform_disagreements():
    # odd characteristic: the quadratic form vanishes nowhere off (0,0,0)
    # among commutative triples except at (0,0,0) itself, where it is -4
    assert dform_disagreements(F7) == [(0, 0, 0)]
    assert dform_disagreements(F4) == []


@pytest.mark.parametrize("ctx", [F2, F3, F4, F5, F7], ids=lambda c: f"q{c.q}")
def test_construct_triple_totality(ctx):
    ident = (1, 0, 0, 1)
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                g1, g2, g3 = construct_triple(ctx, (t1, t2, t3))
                prod = mat_mul(ctx, mat_mul(ctx, g1, g2), g3)
                assert prod == ident or (ctx.p == 2 and prod == ident)


def test_construct_triple_anchors():
    g = construct_triple(F7, (2, 0, 0))
    assert g[0] == (1, 0, 0, 1)  # central-anchored path
    assert construct_triple(F7, (2, 2, 2)) == ((1, 0, 0, 1),) * 3


@pytest.mark.parametrize(
    "t,orders",
    [
        ((0, 1, 2), (2, 3, 7)),
        ((2, 0, 0), (1, 2, 2)),
        ((2, 2, 2), None),
        ((0, 0, 0), (2, 2, 2)),
        ((1, 1, 2), (1, 3, 3)),
        ((1, 1, 5), (3, 3, 7)),
        ((1, 3, 3), (3, 4, 4)),
        ((1, 3, 4), (3, 4, 4)),
        ((2, 1, 1), (1, 3, 3)),
    ],
)
def test_order_triples(t, orders):
    assert order_triple(F7, t) == orders


def test_exceptional_order_triples():
    assert is_exceptional_order_triple((2, 2, 9))
    assert is_exceptional_order_triple((3, 4, 4))
    assert is_exceptional_order_triple((2, 3, 5))
    assert not is_exceptional_order_triple((3, 3, 4))
    assert not is_exceptional_order_triple((1, 3, 3))
    assert not is_exceptional_order_triple((2, 3, 7))


def test_classify_projective_237():
    c = classify(F7, (0, 1, 2))
    assert (c.commutative, c.exceptional, c.projective) == (False, False, True)
    assert c.order_triple == (2, 3, 7)
    assert c.projective_detail.regular and c.projective_detail.kind == "PSL2"
    assert c.projective_detail.subfield_q == 7


def test_classify_exceptional_buckets():
    c = classify(F7, (0, 1, 1))
    assert (c.commutative, c.exceptional, c.projective) == (False, True, False)
    assert c.order_triple == (2, 3, 3)
    # orders (3,4,4) is on the exceptional list, yet for traces (1,3,-3)
    # every witness still generates the full group
    c = classify(F7, (1, 3, 4))
    assert (c.commutative, c.exceptional, c.projective) == (False, True, True)
    assert c.projective_detail.kind == "PSL2" and c.projective_detail.subfield_q == 7
    # while for traces (1,3,3) every witness generates a copy of S4
    c = classify(F7, (1, 3, 3))
    assert (c.commutative, c.exceptional, c.projective) == (False, True, False)
    assert c.order_triple == (3, 4, 4)


def test_classify_commutative_buckets():
    c = classify(F7, (1, 2, 2))
    assert (c.commutative, c.exceptional, c.projective) == (False, False, True)
    assert c.order_triple == (3, 7, 7)
    c = classify(F7, (2, 2, 2))
    assert (c.commutative, c.exceptional, c.projective) == (True, False, False)
    assert c.order_triple is None
    c = classify(F7, (2, 0, 0))
    assert (c.commutative, c.exceptional, c.projective) == (True, False, False)
    assert c.order_triple == (1, 2, 2)
    c = classify(F7, (0, 0, 0))
    assert (c.commutative, c.exceptional, c.projective) == (True, True, False)
    assert c.order_triple == (2, 2, 2)


def test_q7_census_against_family_table():
    census = macbeath_census(F7)
    assert len(census) == 343
    by_bucket = {"commutative": 0, "exceptional": 0, "projective": 0}
    for _, bucket, _ in census:
        by_bucket[bucket] += 1
    assert by_bucket == {"commutative": 51, "exceptional": 76, "projective": 216}
    expected = q7_family_classification()
    got = {t: (bucket, orders) for t, bucket, orders in census}
    assert got == expected


def test_even_sign_lifts_share_classification():
    rng = random.Random(0)
    for _ in range(12):
        t = tuple(rng.randrange(7) for _ in range(3))
        cls = [classify(F7, u) for u in even_sign_lifts(F7, t)]
        flags0 = (cls[0].commutative, cls[0].exceptional, cls[0].projective)
        assert all((c.commutative, c.exceptional, c.projective) == flags0 for c in cls), t


def test_classify_up_to_signs():
    sc = classify_up_to_signs(F7, (1, 3, 3))
    assert sc.exceptional and not sc.projective and sc.partly_projective
    assert not sc.commutative and sc.order_triple == (3, 4, 4)
    assert classify_up_to_signs(F7, (1, 3, 4)) == sc
    sc = classify_up_to_signs(F7, (0, 1, 2))
    assert sc.projective and sc.partly_projective and not sc.exceptional
    assert sc.order_triple == (2, 3, 7)
    sc = classify_up_to_signs(F7, (1, 1, 2))  # even class commutative, odd projective
    assert sc.commutative and sc.partly_projective and not sc.projective
    assert sc.order_triple is None
    assert sign_class_rep(F7, (1, 6, 4)) == (1, 1, 3)


def test_irregularity():
    assert not is_irregular(F7, (1, 2, 3))
    assert not is_irregular(F9, (1, 1, 2))  # traces all land in F3
    rep = is_irregular(F9, (1, 3, 3))
    assert rep.irregular and rep.subfield_degree == 1 and rep.reordering == (0, 1, 2)
    rep = is_irregular(F9, (3, 1, 3))
    assert rep.irregular and rep.reordering == (1, 0, 2)
    assert not is_irregular(F4, (2, 3, 3))  # never irregular in characteristic 2


def test_subgroup_oracle_full_group_and_s4():
    g1, g2 = next(witnesses_reduced(F7, (0, 1, 2)))
    sid = subgroup_oracle(F7, g1, g2)
    assert (sid.order, sid.tag, sid.subfield_q) == (168, "PSL2", 7)
    g1, g2 = next(witnesses_reduced(F7, (1, 3, 3)))
    sid = subgroup_oracle(F7, g1, g2)
    assert (sid.order, sid.tag, sid.subfield_q) == (24, "other", None)


def test_subgroup_oracle_subfield_copies():
    g1, g2 = next(witnesses_reduced(F3, (0, 1, 2)))
    sid = subgroup_oracle(F9, g1, g2)
    assert (sid.tag, sid.subfield_q) == ("PSL2", 3)
    # conjugating off the subfield exercises the certificate path
    h = (1, 3, 0, 1)
    hi = mat_inv(F9, h)
    c1 = mat_mul(F9, mat_mul(F9, h, g1), hi)
    c2 = mat_mul(F9, mat_mul(F9, h, g2), hi)
    sid = subgroup_oracle(F9, c1, c2)
    assert (sid.tag, sid.subfield_q) == ("PSL2", 3)


def test_pgl2_detail_for_irregular_triple():
    found = None
    for t1 in range(3):
        for t2 in range(3, 9):
            for t3 in range(3, 9):
                t = (t1, t2, t3)
                if not is_irregular(F9, t):
                    continue
                c = classify(F9, t)
                if c.projective and c.projective_detail and c.projective_detail.kind == "PGL2":
                    found = c
                    break
            if found:
                break
        if found:
            break
    assert found is not None
    assert found.projective_detail.subfield_q == 3
    assert not found.projective_detail.regular


def test_orbit_counts_theoretical():
    assert orbit_counts_theoretical(2, (2, 3, 7), False, "PSL2").d_r == 1
    oc = orbit_counts_theoretical(7, (2, 3, 7), True, "PSL2")
    assert (oc.d_r, oc.d_wr, oc.exact) == (1, 1, True)
    oc = orbit_counts_theoretical(13, (2, 3, 7), False, "PSL2")
    assert (oc.d_r, oc.d_wr, oc.exact) == (2, 1, True)
    oc = orbit_counts_theoretical(5, (4, 4, 5), True, "PSL2")
    assert (oc.d_r, oc.d_wr, oc.exact) == (2, 2, False)
    oc = orbit_counts_theoretical(3, (3, 3, 4), False, "PSL2")
    assert (oc.d_r, oc.d_wr) == (4, 2)
    with pytest.raises(TridentError) as ei:
        orbit_counts_theoretical(7, (2, 3, 3), False, "PSL2")
    assert ei.value.code == "hypothesis_violated"


def test_orbit_oracle_237():
    nonempty = 0
    for ct in class_triples_with_orders(F7, "PSL2", (2, 3, 7)):
        oc = orbit_counts_oracle(F7, ct)
        if oc.d_r:
            nonempty += 1
            assert (oc.d_r, oc.d_wr) == (1, 1)
    assert nonempty > 0
    nonempty = 0
    for ct in class_triples_with_orders(F13, "PSL2", (2, 3, 7)):
        oc = orbit_counts_oracle(F13, ct)
        if oc.d_r:
            nonempty += 1
            assert (oc.d_r, oc.d_wr) == (2, 1)
    assert nonempty > 0


@pytest.mark.parametrize("ctx", [F2, F4, F8, F9], ids=lambda c: f"q{c.q}")
def test_census_covers_all_triples(ctx):
    assert len(macbeath_census(ctx)) == ctx.q**3
