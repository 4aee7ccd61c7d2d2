"""Scratch validation for macbeath.py against hand-checked values."""

import time

from trident.errors import TridentError
from trident.macbeath import (
    Classification,
    classify,
    classify_up_to_signs,
    class_triples_with_orders,
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
    subgroup_oracle,
    trace_bucket,
    sl2_class_reps_with_trace,
    triple_orders,
    witnesses_reduced,
)
from trident.projective import fq_ctx, mat_mul, mat_inv, psl2_order, pgl2_order

t0 = time.time()

F7 = fq_ctx(7, 1)
F2 = fq_ctx(2, 1)
F3 = fq_ctx(3, 1)
F4 = fq_ctx(2, 2)
F5 = fq_ctx(5, 1)
F8 = fq_ctx(2, 3)
F9 = fq_ctx(3, 2)
F13 = fq_ctx(13, 1)

# --- class reps and buckets
for ctx in (F7, F9):
    total = sum(len(trace_bucket(ctx, tau)) for tau in range(ctx.q))
    assert total == ctx.q * (ctx.q * ctx.q - 1), total
assert len(sl2_class_reps_with_trace(F7, 2)) == 3
assert len(sl2_class_reps_with_trace(F7, 5)) == 3  # -2
assert len(sl2_class_reps_with_trace(F7, 1)) == 1
assert len(sl2_class_reps_with_trace(F2, 0)) == 2
assert len(sl2_class_reps_with_trace(F4, 1)) == 1

# --- dform
assert dform(F7, (0, 1, 2)) == (0 + 1 + 4 - 0 - 4) % 7
assert dform(F7, (2, 2, 2)) == 0
assert dform(F7, (0, 0, 0)) == 3  # -4
assert dform(F7, (2, 0, 0)) == 0
assert dform(F7, (1, 1, 2)) == (1 + 1 + 4 - 2 - 4) % 7  # 0 -> commutative even class

# --- commutativity closed form vs oracle, exhaustive tiny q
for ctx in (F2, F3, F4, F5):
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                t = (t1, t2, t3)
                assert is_commutative(ctx, t) == is_commutative_oracle(ctx, t), (ctx.q, t)
print("commutativity closed form ok", round(time.time() - t0, 2))

assert dform_disagreements(F7) == [(0, 0, 0)]
assert dform_disagreements(F4) == []

# --- construct_triple totality and determinism
for ctx in (F2, F3, F4, F5, F7):
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                g1, g2, g3 = construct_triple(ctx, (t1, t2, t3))
                assert mat_mul(ctx, mat_mul(ctx, g1, g2), g3) == (1, 0, 0, 1) or ctx.p == 2
g = construct_triple(F7, (2, 0, 0))
assert g[0] == (1, 0, 0, 1)  # central-anchored fallback
assert construct_triple(F7, (2, 2, 2)) == ((1, 0, 0, 1),) * 3
print("construct_triple totality ok", round(time.time() - t0, 2))

# --- order triples
assert order_triple(F7, (0, 1, 2)) == (2, 3, 7)
assert order_triple(F7, (2, 0, 0)) == (1, 2, 2)
assert order_triple(F7, (2, 2, 2)) is None
assert order_triple(F7, (0, 0, 0)) == (2, 2, 2)
assert order_triple(F7, (1, 1, 2)) == (1, 3, 3)  # commutative even class
assert order_triple(F7, (1, 1, 5)) == (3, 3, 7)  # odd class, projective
assert order_triple(F7, (1, 3, 3)) == (3, 4, 4)
assert order_triple(F7, (1, 3, 4)) == (3, 4, 4)  # (1,3,-3)
assert order_triple(F7, (2, 1, 1)) == (1, 3, 3)

# --- exceptional list
assert is_exceptional_order_triple((2, 2, 9))
assert is_exceptional_order_triple((3, 4, 4))
assert not is_exceptional_order_triple((3, 3, 4))
assert not is_exceptional_order_triple((1, 3, 3))
assert not is_exceptional_order_triple((2, 3, 7))

# --- classify: reference examples over F7
c = classify(F7, (0, 1, 2))
assert (c.commutative, c.exceptional, c.projective) == (False, False, True)
assert c.order_triple == (2, 3, 7)
assert c.projective_detail.regular and c.projective_detail.kind == "PSL2"
assert c.projective_detail.subfield_q == 7

c = classify(F7, (0, 1, 1))
assert (c.commutative, c.exceptional, c.projective) == (False, True, False)
assert c.order_triple == (2, 3, 3)

c = classify(F7, (1, 2, 2))
assert (c.commutative, c.exceptional, c.projective) == (False, False, True)
assert c.order_triple == (3, 7, 7)

# (1,3,-3): every witness generates PSL2(F7), so the ordered triple is
# projective (and exceptional, orders (3,4,4)); the sign class is not
c = classify(F7, (1, 3, 4))
assert (c.commutative, c.exceptional, c.projective) == (False, True, True)
assert c.projective_detail.kind == "PSL2" and c.projective_detail.subfield_q == 7

c = classify(F7, (1, 3, 3))  # every witness generates S4: not a subfield form
assert (c.commutative, c.exceptional, c.projective) == (False, True, False)
assert c.order_triple == (3, 4, 4)

c = classify(F7, (2, 2, 2))
assert (c.commutative, c.exceptional, c.projective) == (True, False, False)
assert c.order_triple is None

c = classify(F7, (2, 0, 0))
assert (c.commutative, c.exceptional, c.projective) == (True, False, False)
assert c.order_triple == (1, 2, 2)

c = classify(F7, (0, 0, 0))
assert (c.commutative, c.exceptional, c.projective) == (True, True, False)  # (2,2,2) orders
assert c.order_triple == (2, 2, 2)
print("classify examples ok", round(time.time() - t0, 2))

# --- full F7 census against the hand-built family table
census = macbeath_census(F7)
assert len(census) == 343
by_bucket = {"commutative": 0, "exceptional": 0, "projective": 0}
for _, bucket, _ in census:
    by_bucket[bucket] += 1
print("F7 census buckets:", by_bucket, round(time.time() - t0, 2))
assert by_bucket == {"commutative": 51, "exceptional": 76, "projective": 216}, by_bucket

rows = {t: (bucket, orders) for t, bucket, orders in census}


def sign_variants(ctx, base, parity):
    """All arrangements of +-base_i with sign parity in {'any','even','odd'}."""
    import itertools

    out = set()
    for perm in itertools.permutations(base):
        for signs in itertools.product((1, -1), repeat=3):
            n_minus = sum(1 for s, x in zip(signs, perm) if s < 0 and x != 0)
            if parity == "even" and n_minus % 2:
                continue
            if parity == "odd" and n_minus % 2 == 0:
                continue
            out.add(tuple(x if s > 0 else ctx.neg(x) for s, x in zip(signs, perm)))
    return out


FAMILIES = [
    # (base, parity, bucket, orders or None)
    ((2, 2, 2), "even", "commutative", None),
    ((2, 0, 0), "any", "commutative", (1, 2, 2)),
    ((2, 1, 1), "even", "commutative", (1, 3, 3)),
    ((2, 3, 3), "even", "commutative", (1, 4, 4)),
    ((0, 0, 0), "any", "commutative", (2, 2, 2)),
    ((0, 3, 3), "any", "commutative", (2, 4, 4)),
    ((1, 1, 1), "odd", "commutative", (3, 3, 3)),
    ((0, 0, 1), "any", "exceptional", (2, 2, 3)),
    ((0, 0, 3), "any", "exceptional", (2, 2, 4)),
    ((0, 1, 1), "any", "exceptional", (2, 3, 3)),
    ((0, 1, 3), "any", "exceptional", (2, 3, 4)),
    ((1, 1, 1), "even", "exceptional", (3, 3, 3)),
    ((1, 3, 3), "any", "exceptional", (3, 4, 4)),
    ((0, 1, 2), "any", "projective", (2, 3, 7)),
    ((0, 2, 3), "any", "projective", (2, 4, 7)),
    ((0, 2, 2), "any", "projective", (2, 7, 7)),
    ((1, 1, 3), "any", "projective", (3, 3, 4)),
    ((1, 1, 2), "odd", "projective", (3, 3, 7)),
    ((1, 2, 3), "any", "projective", (3, 4, 7)),
    ((1, 2, 2), "any", "projective", (3, 7, 7)),
    ((3, 3, 3), "any", "projective", (4, 4, 4)),
    ((2, 3, 3), "odd", "projective", (4, 4, 7)),
    ((2, 2, 3), "any", "projective", (4, 7, 7)),
    ((2, 2, 2), "odd", "projective", (7, 7, 7)),
]
covered = set()
for base, parity, bucket, orders in FAMILIES:
    for t in sign_variants(F7, base, parity):
        assert t not in covered, t
        covered.add(t)
        got_bucket, got_orders = rows[t]
        assert got_bucket == bucket, (t, base, parity, bucket, got_bucket)
        assert got_orders == orders, (t, base, parity, orders, got_orders)
assert len(covered) == 343
print("F7 family table ok", round(time.time() - t0, 2))

# --- sign lemma: even-sign lifts share classification (oracle check on F7)
import random

random.seed(0)
for _ in range(30):
    t = tuple(random.randrange(7) for _ in range(3))
    cls = [classify(F7, u) for u in even_sign_lifts(F7, t)]
    assert all(
        (c.commutative, c.exceptional, c.projective) == (cls[0].commutative, cls[0].exceptional, cls[0].projective)
        for c in cls
    ), t
print("sign lemma ok", round(time.time() - t0, 2))

# --- up-to-signs classification: the paper's "(1,3,-3) ... the triple is not
# projective" statement lives here (even-minus lifts generate S4)
sc = classify_up_to_signs(F7, (1, 3, 3))
assert sc.exceptional and not sc.projective and sc.partly_projective and not sc.commutative
assert sc.order_triple == (3, 4, 4)
assert classify_up_to_signs(F7, (1, 3, 4)) == sc
sc = classify_up_to_signs(F7, (0, 1, 2))
assert sc.projective and sc.partly_projective and not sc.exceptional
assert sc.order_triple == (2, 3, 7)
sc = classify_up_to_signs(F7, (1, 1, 2))  # even comm, odd projective (3,3,7)
assert sc.commutative and sc.partly_projective and not sc.projective
assert sc.order_triple is None
assert sign_class_rep(F7, (1, 6, 4)) == (1, 1, 3)

# --- irregularity over F9 (3 = x with x^2 = -1 = 2, a nonsquare of F3)
assert not is_irregular(F7, (1, 2, 3))
assert not is_irregular(F9, (1, 1, 2))  # traces all in F3
rep = is_irregular(F9, (1, 3, 3))
assert rep.irregular and rep.subfield_degree == 1 and rep.reordering == (0, 1, 2)
rep = is_irregular(F9, (3, 1, 3))
assert rep.irregular and rep.reordering == (1, 0, 2)
assert not is_irregular(F4, (2, 3, 3))  # char 2 never irregular

# --- subgroup oracle
g1, g2 = next(witnesses_reduced(F7, (0, 1, 2)))
sid = subgroup_oracle(F7, g1, g2)
assert (sid.order, sid.tag, sid.subfield_q) == (168, "PSL2", 7)
g1, g2 = next(witnesses_reduced(F7, (1, 3, 3)))
sid = subgroup_oracle(F7, g1, g2)
assert (sid.order, sid.tag, sid.subfield_q) == (24, "other", None)  # an S4 copy
# a subfield copy inside F9, then a conjugated copy (certificate path)
g1, g2 = next(witnesses_reduced(F3, (0, 1, 2 % 3)))
sid = subgroup_oracle(F9, g1, g2)
assert (sid.tag, sid.subfield_q) == ("PSL2", 3), sid
h = (1, 3, 0, 1)
hi = mat_inv(F9, h)
c1 = mat_mul(F9, mat_mul(F9, h, g1), hi)
c2 = mat_mul(F9, mat_mul(F9, h, g2), hi)
sid = subgroup_oracle(F9, c1, c2)
assert (sid.tag, sid.subfield_q) == ("PSL2", 3), sid
print("subgroup oracle ok", round(time.time() - t0, 2))

# --- PGL2 detail for an irregular projective triple over F9
found_pgl = None
for t1 in range(3):  # t1 in F3
    for t2 in range(3, 9):
        for t3 in range(3, 9):
            t = (t1, t2, t3)
            if not is_irregular(F9, t):
                continue
            c = classify(F9, t)
            if c.projective and c.projective_detail is not None and c.projective_detail.kind == "PGL2":
                found_pgl = (t, c)
                break
        if found_pgl:
            break
    if found_pgl:
        break
assert found_pgl is not None
t, c = found_pgl
assert c.projective_detail.subfield_q == 3 and not c.projective_detail.regular
print("PGL2 detail found at", t, c.order_triple, round(time.time() - t0, 2))

# --- theoretical orbit counts
assert orbit_counts_theoretical(2, (2, 3, 7), False, "PSL2").d_r == 1
oc = orbit_counts_theoretical(7, (2, 3, 7), True, "PSL2")
assert (oc.d_r, oc.d_wr, oc.exact) == (1, 1, True)
oc = orbit_counts_theoretical(13, (2, 3, 7), False, "PSL2")
assert (oc.d_r, oc.d_wr, oc.exact) == (2, 1, True)
oc = orbit_counts_theoretical(5, (4, 4, 5), True, "PSL2")
assert (oc.d_r, oc.d_wr, oc.exact) == (2, 2, False)
oc = orbit_counts_theoretical(3, (3, 3, 4), False, "PSL2")
assert (oc.d_r, oc.d_wr) == (4, 2)
try:
    orbit_counts_theoretical(7, (2, 3, 3), False, "PSL2")
    raise SystemExit("expected hypothesis violation")
except TridentError as e:
    assert e.code == "hypothesis_violated"

# --- orbit oracle: (2,3,7) over F7 gives (1,1); over F13 gives (2,1)
nonempty = 0
for ct in class_triples_with_orders(F7, "PSL2", (2, 3, 7)):
    oc = orbit_counts_oracle(F7, ct)
    if oc.d_r:
        nonempty += 1
        assert (oc.d_r, oc.d_wr) == (1, 1), (ct, oc)
assert nonempty > 0
print("orbit oracle F7 ok", nonempty, "nonempty class triples", round(time.time() - t0, 2))

nonempty = 0
for ct in class_triples_with_orders(F13, "PSL2", (2, 3, 7)):
    oc = orbit_counts_oracle(F13, ct)
    if oc.d_r:
        nonempty += 1
        assert (oc.d_r, oc.d_wr) == (2, 1), (ct, oc)
assert nonempty > 0
print("orbit oracle F13 ok", nonempty, "nonempty class triples", round(time.time() - t0, 2))

# --- char-2 trichotomy and census sanity
for ctx in (F2, F4, F8):
    cen = macbeath_census(ctx)
    assert len(cen) == ctx.q**3
print("char-2 censuses ok", round(time.time() - t0, 2))

c9 = macbeath_census(F9)
assert len(c9) == 729
print("F9 census ok", round(time.time() - t0, 2))

print("ALL MACBEATH SMOKE PASSED", round(time.time() - t0, 2), "s")
