import sys

sys.path.insert(0, "src")

import numpy as np

from trident.congruence import (
    CurveReport,
    GeneratorTriple,
    P_N_order,
    construction_triple,
    explicit_generators,
    genus_of_quotient,
    group_generator_triple,
    p_group_orders,
    reduce_lambda_mod_p,
    reduce_triple,
    sharp_triple,
    surjectivity_transfer_guaranteed,
    theorem_a,
    theorem_b_report,
)
from trident.cyclotomic import INF
from trident.errors import TridentError
from trident.macbeath import dform, subgroup_oracle, triple_orders
from trident.projective import fq_ctx, group_order

ok = 0


def check(name, cond):
    global ok
    assert cond, name
    ok += 1
    print(f"ok {name}")


# reduce_lambda_mod_p
F13 = fq_ctx(13, 1)
root = reduce_lambda_mod_p(7, 13, F13)
poly_roots = [x for x in range(13) if (pow(x, 3, 13) + x * x - 2 * x - 1) % 13 == 0]
check("lambda7 mod 13 first root", root == poly_roots[0] and len(poly_roots) == 3)
check("lambda4 mod p", reduce_lambda_mod_p(4, 13, F13) == 0)
check("lambda_oo mod p", reduce_lambda_mod_p(INF, 13, F13) == 2)
try:
    reduce_lambda_mod_p(7, 7, fq_ctx(7, 1))
    raise SystemExit("ramified not raised")
except TridentError as e:
    check("ramified error", e.code == "ramified")
try:
    reduce_lambda_mod_p(7, 5, fq_ctx(5, 1))  # lambda_7 needs degree 3 at 5? ord(5 mod 7)=?
    raise SystemExit("degree mismatch not raised")
except TridentError as e:
    check("degree mismatch error", e.code == "degree_mismatch")

# reduce_triple coherence
rl = reduce_triple((2, 3, 7), 13)
check("trace triple (2,3,7)/13 in F13", rl.ctx_big.q == 13 and rl.ctx_small.q == 13)
check("root indices recorded", len(rl.root_indices) == 3)
rl2 = reduce_triple((2, 3, INF), 5)
check("parabolic trace is 2", rl2.lam2_images[2] == 2 and rl2.trace_triple == (0, 1, 2))

# theorem_a spot checks
r1 = theorem_a((2, 3, 7), 13)
check(
    "(2,3,7)/13 PSL2(F13) g=14 g0=0",
    (r1.group_label, r1.genus, r1.genus_X0, r1.q, r1.r) == ("PSL2(F13)", 14, 0, 13, 1)
    and r1.validated,
)
r2 = theorem_a((2, 4, 6), 5)
check(
    "(2,4,6)/5 PGL2(F5) g=6",
    (r2.group_label, r2.genus, r2.group_kind, r2.q, r2.r) == ("PGL2(F5)", 6, "PGL2", 5, 2)
    and r2.validated,
)
r3 = theorem_b_report((3, 5, 6), 11)
check(
    "(3,5,6)/11 PSL2(F11), base Q(sqrt(5)), no collapse",
    (r3.group_label, r3.field_D_frob, r3.d_Xf, r3.d_XfG) == ("PSL2(F11)", "Q(sqrt(5))", 2, 2),
)
r4 = theorem_b_report((2, 5, 5), 2)
check(
    "(2,5,5)/2 order 60 over F4",
    (r4.group_order, r4.q, r4.group_label, r4.genus) == (60, 4, "PGL2(F4)", 4)
    and not r4.validated,
)
r5 = theorem_b_report((2, 3, 7), 7)
check(
    "(2,3,7)/7 PSL2(F7) g=3 g0=0, D(sqrt(-7)) for (X,f,G)",
    (r5.group_label, r5.genus, r5.genus_X0) == ("PSL2(F7)", 3, 0)
    and (r5.field_D_frob, r5.field_D_sqrt, r5.d_Xf, r5.d_XfG) == ("Q", "Q(sqrt(-7))", 1, 1),
)
r6 = theorem_b_report((2, 3, 7), 3)
check(
    "(2,3,7)/3 PSL2(F27) over Q",
    (r6.group_label, r6.q, r6.r, r6.field_D_frob) == ("PSL2(F27)", 27, 3, "Q")
    and r6.triple == (2, INF, 7)
    and r6.ramification == (2, 3, 7),
)
r7 = theorem_b_report((5, 5, 5), 2)
check(
    "(5,5,5)/2 PGL2(F4) g=13 g0=2",
    (r7.group_label, r7.genus, r7.genus_X0, r7.group_kind) == ("PGL2(F4)", 13, 2, "PSL2"),
)
r8 = theorem_b_report((2, 4, 7), 7)
check("(2,4,7)/7 g=10 g0=1", (r8.group_label, r8.genus, r8.genus_X0) == ("PSL2(F7)", 10, 1))

# reorder invariance
for perm in [(2, 4, 6), (4, 2, 6), (6, 4, 2)]:
    rp = theorem_a(perm, 5)
    assert (rp.group_kind, rp.q) == ("PGL2", 5), perm
check("group kind reorder invariant", True)

# inadmissible / non-hyperbolic errors
try:
    theorem_a((2, 3, 6), 5)
    raise SystemExit("euclidean accepted")
except TridentError as e:
    check("non-hyperbolic rejected", e.code == "non_hyperbolic")
try:
    theorem_a((2, 3, 7), 2)
    raise SystemExit("p=2 even entry accepted")
except TridentError as e:
    check("inadmissible rejected", e.code == "inadmissible_prime")
try:
    theorem_b_report((2, 3, INF), 7)
    raise SystemExit("oo accepted by moduli report")
except TridentError as e:
    check("oo rejected by theorem_b_report", e.code == "infinite_order")

# explicit generators
g1 = explicit_generators((2, 3, 7), 13)
check("(2,3,7)/13 generator orders", triple_orders(g1.ctx, g1.mats) == (2, 3, 7))
check(
    "(2,3,7)/13 generates PSL2(F13): regular cover genus matches",
    genus_of_quotient(g1, "point-stabilizer") == 14,
)
g2 = explicit_generators((2, 5, 5), 2)
orders2 = triple_orders(g2.ctx, g2.mats)
oracle2 = subgroup_oracle(g2.ctx, g2.mats[0], g2.mats[1])
check(
    "(2,5,5)/2 fallback triple generates the order-60 group over F4",
    orders2 == (2, 5, 5) and (oracle2.order, oracle2.subfield_q) == (60, 4),
)
g3 = explicit_generators((2, 3, INF), 5)
tr3 = tuple(g3.ctx.add(m[0], m[3]) for m in g3.mats)
check("(2,3,oo)/5 traces (0,1,2)", tr3 == (0, 1, 2))
from trident.projective import element_order

check("(2,3,oo)/5 third generator unipotent of order 5",
      element_order(g3.ctx, "PSL2", g3.mats[2]) == 5)

# tower genera: X1 for (2,3,7)/7 and Borel examples
gen77 = group_generator_triple("PSL2", 7, (2, 3, 7))
check("X0(2,3,7;7) = 0", genus_of_quotient(gen77, "Borel") == 0)
check("X1(2,3,7;7) = 0", genus_of_quotient(gen77, "unipotent-stabilizer") == 0)
check("X(2,3,7;7) regular = 3", genus_of_quotient(gen77, "regular") == 3)
gen555 = group_generator_triple("PSL2", 4, (5, 5, 5))
check("X0(5,5,5;2) = 2", genus_of_quotient(gen555, "Borel") == 2)
try:
    genus_of_quotient(gen77, "parabolic")
    raise SystemExit("bad descriptor accepted")
except TridentError as e:
    check("unknown descriptor rejected", e.code == "unknown_descriptor")

# regular-cover genus equals the report genus across several rows
for t, p in [((2, 3, 7), 13), ((2, 4, 6), 5), ((2, 3, 8), 7), ((3, 4, 4), 3), ((2, 5, 5), 2)]:
    rep = theorem_b_report(t, p)
    gen = group_generator_triple(rep.group_kind, rep.q, rep.ramification)
    assert genus_of_quotient(gen, "point-stabilizer") == rep.genus, (t, p)
    assert genus_of_quotient(gen, "Borel") == rep.genus_X0, (t, p)
check("Wolfart genus = regular RH genus on sample rows", True)

# characteristic-2 collapse shapes
rlc = reduce_triple((INF, 5, 5), 2)
check("(oo,5,5)/2 collapses", dform(rlc.ctx_big, rlc.trace_triple) == 0)
rlnc = reduce_triple((INF, 3, 5), 2)
check("(oo,3,5)/2 does not collapse", dform(rlnc.ctx_big, rlnc.trace_triple) != 0)
rlnc2 = reduce_triple((INF, INF, 3), 2)
check("(oo,oo,3)/2 does not collapse", dform(rlnc2.ctx_big, rlnc2.trace_triple) != 0)
r77 = theorem_a((INF, 7, 7), 2)
check(
    "(oo,7,7)/2 report emitted via group-level witness",
    (r77.group_label, r77.genus) == ("PGL2(F8)", 55) and not r77.validated,
)
try:
    theorem_a((3, 3, INF), 2)
    raise SystemExit("(3,3,oo)/2 accepted")
except TridentError as e:
    check("(3,3,oo)/2 sharp orders inconsistent", e.code == "inconsistent_ramification")

# odd p never collapses on a sample sweep
import itertools

for t in itertools.product([2, 3, 4, 5, 7, INF], repeat=3):
    from trident.triangle import is_hyperbolic, admissible_prime

    if not is_hyperbolic(t):
        continue
    for p in (3, 5, 7):
        if not admissible_prime(t, p).ok:
            continue
        try:
            rl = reduce_triple(construction_triple(t, p), p)
        except TridentError as e:
            assert e.code == "guard_exceeded", (t, p)
            continue
        assert dform(rl.ctx_big, rl.trace_triple) != 0, (t, p)
check("odd p trace triples never collapse (sample sweep)", True)

# composite level orders
check("PSL2(Z/7) order", p_group_orders(7, True, 1) == 168)
check("PGL2(Z/5) order", p_group_orders(5, False, 1) == 120)
check("PSL2(Z/25) order", p_group_orders(5, True, 2) == 7500)
count = 0
for a, b, c, d in itertools.product(range(9), repeat=4):
    if (a * d - b * c) % 9 == 1:
        count += 1
check("PSL2(Z/9) brute force", count // 2 == p_group_orders(3, True, 2))
check("composite product", P_N_order([(2, True, 1), (3, False, 1)]) == 6 * 24)
try:
    P_N_order([(5, True, 1), (5, False, 1)])
    raise SystemExit("repeated prime accepted")
except TridentError as e:
    check("repeated prime rejected", e.code == "repeated_prime")
check("lifting flag", surjectivity_transfer_guaranteed(5) and not surjectivity_transfer_guaranteed(3))

print(f"\nall {ok} congruence smoke checks passed")
