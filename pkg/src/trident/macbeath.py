"""Two-generator subgroups of PSL2(F_q) by trace triples.

A group triple is (g1, g2, g3) in SL2(F_q)^3 with g1 g2 g3 = 1; its trace
triple is (tr g1, tr g2, tr g3) and T(t) is the set of group triples with
trace triple t.  T(t) is never empty, and the classification of the subgroup
+-<g1, g2, g3> of PSL2(F_q) is controlled by t alone:

* commutative: some witness generates a commutative subgroup of PSL2.  The
  classical criterion is vanishing of the half-discriminant
  d(t) = t1^2 + t2^2 + t3^2 - t1 t2 t3 - 4, but (0,0,0) over odd q is
  commutative through an anticommuting witness pair (g1 g2 = -g2 g1, which is
  commutation in PSL2) while d = -4 != 0; both answers are computed and
  disagreements are reported rather than silently resolved.
* exceptional: some witness has order triple (2,2,c) or one of the nine
  spherical order triples.
* projective: every witness generates a conjugate of PSL2(k) or of an
  embedded PGL2(k0) for subfields k, k0 of F_q.

Every trace triple is commutative, exceptional, or projective (for triples up
to signs: partly projective), commutative and projective never overlap, and a
non-commutative non-exceptional triple is always projective, so the expensive
all-witness subgroup check is needed only for the exceptional overlap cases.

Witness enumeration is conjugacy-reduced: g1 runs over SL2-class
representatives with trace t1 (one semisimple representative per trace;
identity and the unipotent square classes at trace +-2), g2 over the full
trace bucket.  Every property tested here is invariant under simultaneous
conjugation, so this loses nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import TridentError, guard_exceeded
from .projective import (
    FqCtx,
    Mat,
    apply_auto,
    canonical,
    canonical_psl2,
    closure,
    conj_class_id,
    element_order,
    fq_ctx,
    group_table,
    identity_index,
    mat_identity,
    mat_inv,
    mat_mul,
    max_q_guard,
    outer_reps,
    pgl2_order,
    psl2_order,
    sl2_elements_raw,
)

EXCEPTIONAL_ORDER_TRIPLES = frozenset(
    [
        (2, 3, 3),
        (3, 3, 3),
        (3, 4, 4),
        (2, 3, 4),
        (2, 5, 5),
        (5, 5, 5),
        (3, 3, 5),
        (3, 5, 5),
        (2, 3, 5),
    ]
)


def is_exceptional_order_triple(orders: tuple[int, int, int]) -> bool:
    """(2,2,c) with c >= 2, or one of the nine spherical order triples."""
    o = tuple(sorted(orders))
    if o[0] == 2 and o[1] == 2 and o[2] >= 2:
        return True
    return o in EXCEPTIONAL_ORDER_TRIPLES


# -- witnesses ------------------------------------------------------------------


@lru_cache(maxsize=32)
def _trace_buckets(p: int, r: int) -> dict[int, list[Mat]]:
    ctx = fq_ctx(p, r)
    cap = max_q_guard()
    if ctx.q > cap:
        raise guard_exceeded("q for witness enumeration", ctx.q, cap)
    buckets: dict[int, list[Mat]] = {tau: [] for tau in range(ctx.q)}
    for m in sl2_elements_raw(ctx):
        buckets[ctx.add(m[0], m[3])].append(m)
    return buckets


def trace_bucket(ctx: FqCtx, tau: int) -> list[Mat]:
    """All SL2(F_q) matrices with the given trace, enumeration order."""
    return _trace_buckets(ctx.p, ctx.r)[tau]


def companion(ctx: FqCtx, tau: int) -> Mat:
    return (tau, ctx.neg(ctx.one), ctx.one, ctx.zero)


def sl2_class_reps_with_trace(ctx: FqCtx, tau: int) -> list[Mat]:
    """One representative per SL2-conjugacy class with trace tau.

    Semisimple traces carry a single class.  At trace +-2 the classes are the
    scalar and the two (one in characteristic 2) unipotent square classes.
    """
    two = ctx.scalar(2)
    if ctx.p == 2:
        if tau == ctx.zero:
            return [mat_identity(ctx), (ctx.one, ctx.one, ctx.zero, ctx.one)]
        return [companion(ctx, tau)]
    one = ctx.one
    if tau == two:
        reps = [mat_identity(ctx), (one, one, ctx.zero, one)]
        nu = ctx.first_nonsquare()
        reps.append((one, nu, ctx.zero, one))
        return reps
    if tau == ctx.neg(two):
        return [tuple(ctx.neg(x) for x in m) for m in sl2_class_reps_with_trace(ctx, two)]
    return [companion(ctx, tau)]


def commutes_projectively(ctx: FqCtx, g1: Mat, g2: Mat) -> bool:
    """g1 g2 = +-g2 g1, i.e. the images commute in PSL2(F_q)."""
    return canonical_psl2(ctx, mat_mul(ctx, g1, g2)) == canonical_psl2(
        ctx, mat_mul(ctx, g2, g1)
    )


def witnesses_reduced(ctx: FqCtx, t: tuple[int, int, int]):
    """Witness pairs (g1, g2) with g1 a class representative: one per
    conjugation orbit of T(t) at least."""
    t1, t2, t3 = t
    for g1 in sl2_class_reps_with_trace(ctx, t1):
        for g2 in trace_bucket(ctx, t2):
            prod = mat_mul(ctx, g1, g2)
            if ctx.add(prod[0], prod[3]) == t3:
                yield g1, g2


def dform(ctx: FqCtx, t: tuple[int, int, int]) -> int:
    """Half-discriminant t1^2 + t2^2 + t3^2 - t1 t2 t3 - 4."""
    t1, t2, t3 = t
    s = ctx.add(ctx.add(ctx.mul(t1, t1), ctx.mul(t2, t2)), ctx.mul(t3, t3))
    s = ctx.sub(s, ctx.mul(ctx.mul(t1, t2), t3))
    return ctx.sub(s, ctx.scalar(4))


def is_commutative(ctx: FqCtx, t: tuple[int, int, int]) -> bool:
    """Does some witness generate a commutative subgroup of PSL2?

    Closed form: d(t) = 0, plus the anticommuting case t = (0,0,0) for odd q
    (an anticommuting pair forces all three traces to vanish, and a solution
    of a^2 + b^2 = -1 always exists).  The brute-force oracle below validates
    this against witness enumeration.
    """
    if dform(ctx, t) == ctx.zero:
        return True
    return ctx.p != 2 and t == (0, 0, 0)


def is_commutative_oracle(ctx: FqCtx, t: tuple[int, int, int]) -> bool:
    """Ground truth by witness enumeration (conjugacy-reduced)."""
    return any(commutes_projectively(ctx, g1, g2) for g1, g2 in witnesses_reduced(ctx, t))


def dform_disagreements(ctx: FqCtx) -> list[tuple[int, int, int]]:
    """Trace triples where the d(t) = 0 criterion and the witness oracle
    disagree ((0,0,0) for odd q)."""
    out = []
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                t = (t1, t2, t3)
                if (dform(ctx, t) == ctx.zero) != is_commutative_oracle(ctx, t):
                    out.append(t)
    return out


# -- triple construction -----------------------------------------------------------


def construct_triple(ctx: FqCtx, t: tuple[int, int, int]) -> tuple[Mat, Mat, Mat]:
    """First witness (g1, g2, g3), g1 g2 g3 = 1, tr g_i = t_i, in a fixed
    deterministic search order.  Exhaustion would contradict the nonemptiness
    theorem, so it is an internal error."""
    cap = max_q_guard()
    if ctx.q > cap:
        raise guard_exceeded("q for witness construction", ctx.q, cap)
    t1, t2, t3 = t
    two = ctx.scalar(2)
    ident = mat_identity(ctx)
    if t == (two, two, two):
        return (ident, ident, ident)

    def finish(g1: Mat, g2: Mat) -> tuple[Mat, Mat, Mat]:
        g3 = mat_inv(ctx, mat_mul(ctx, g1, g2))
        assert mat_mul(ctx, mat_mul(ctx, g1, g2), g3) == ident
        assert ctx.add(g3[0], g3[3]) == t3
        return (g1, g2, g3)

    # companion-anchored scan: g1 = [[t1,-1],[1,0]]; entries of g2 = [[a,b],[c,d]]
    # with d = t2 - a and c = t1 a + b - t3 forced by the trace conditions
    g1 = companion(ctx, t1)
    for a in range(ctx.q):
        d = ctx.sub(t2, a)
        for b in range(ctx.q):
            c = ctx.sub(ctx.add(ctx.mul(t1, a), b), t3)
            if ctx.sub(ctx.mul(a, d), ctx.mul(b, c)) == ctx.one:
                return finish(g1, (a, b, c, d))

    # central-anchored: g1 = eps*I needs eps*t2 = t3
    for eps in ([ctx.one] if ctx.p == 2 else [ctx.one, ctx.neg(ctx.one)]):
        if t1 == ctx.mul(eps, two) and ctx.mul(eps, t2) == t3:
            g1 = (eps, ctx.zero, ctx.zero, eps)
            return finish(g1, companion(ctx, t2))

    # full scan fallback
    for g1 in trace_bucket(ctx, t1):
        for g2 in trace_bucket(ctx, t2):
            prod = mat_mul(ctx, g1, g2)
            if ctx.add(prod[0], prod[3]) == t3:
                return finish(g1, g2)
    raise AssertionError(f"no witness for trace triple {t} over F_{ctx.q}")


def triple_orders(ctx: FqCtx, g: tuple[Mat, Mat, Mat]) -> tuple[int, int, int]:
    return tuple(sorted(element_order(ctx, "PSL2", gi) for gi in g))  # type: ignore[return-value]


def _scan_order_data(ctx: FqCtx, t: tuple[int, int, int]):
    """(all witness order triples, commuting-witness order triples)."""
    all_orders: set[tuple[int, int, int]] = set()
    comm_orders: set[tuple[int, int, int]] = set()
    for g1, g2 in witnesses_reduced(ctx, t):
        g3 = mat_inv(ctx, mat_mul(ctx, g1, g2))
        orders = triple_orders(ctx, (g1, g2, g3))
        all_orders.add(orders)
        if commutes_projectively(ctx, g1, g2):
            comm_orders.add(orders)
    return all_orders, comm_orders


def order_triple(ctx: FqCtx, t: tuple[int, int, int]):
    """Sorted PSL2-order triple of witnesses, or None when ill-defined.

    Non-commutative triples have the same order triple for every witness.
    For commutative triples the orders over commuting witnesses are reported
    when unique (the reference tabulation's convention), else None.
    """
    if not is_commutative(ctx, t):
        return triple_orders(ctx, construct_triple(ctx, t))
    _, comm = _scan_order_data(ctx, t)
    if len(comm) == 1:
        return next(iter(comm))
    return None


def is_exceptional(ctx: FqCtx, t: tuple[int, int, int]) -> bool:
    """Does some witness have a (2,2,c) or spherical order triple?"""
    if not is_commutative(ctx, t):
        return is_exceptional_order_triple(triple_orders(ctx, construct_triple(ctx, t)))
    candidates, _ = _scan_order_data(ctx, t)
    return any(is_exceptional_order_triple(o) for o in candidates)


# -- regularity -----------------------------------------------------------------


@dataclass(frozen=True)
class IrregularityReport:
    irregular: bool
    reordering: tuple[int, int, int] | None  # indices placing t1' in the subfield
    subfield_degree: int | None  # [k : F_p]

    def __bool__(self) -> bool:
        return self.irregular


def trace_field_degree(ctx: FqCtx, t: tuple[int, int, int]) -> int:
    """[F_p(t1,t2,t3) : F_p]."""
    return math.lcm(*(ctx.element_degree(x) for x in t))


def is_irregular(ctx: FqCtx, t: tuple[int, int, int]) -> IrregularityReport:
    """Irregular: F_p(t) has an index-2 subfield k with, after reordering,
    t1 in k and t2, t3 each zero or a square root of a nonsquare of k.

    Characteristic 2 has no nonsquares, so only odd q can be irregular.
    """
    none = IrregularityReport(False, None, None)
    if ctx.p == 2:
        return none
    d = trace_field_degree(ctx, t)
    if d % 2:
        return none
    dk = d // 2
    size_k = ctx.p**dk

    def in_k(x: int) -> bool:
        return dk % ctx.element_degree(x) == 0

    def sqrt_from_k(x: int) -> bool:
        if x == ctx.zero:
            return True
        sq = ctx.mul(x, x)
        if not in_k(sq):
            return False
        # nonsquare in k, tested inside F_q: u^((|k|-1)/2) = -1
        return ctx.pow_el(sq, (size_k - 1) // 2) == ctx.neg(ctx.one)

    for perm in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        i, j, l = perm
        if in_k(t[i]) and sqrt_from_k(t[j]) and sqrt_from_k(t[l]):
            return IrregularityReport(True, perm, dk)
    return none


# -- subgroup oracle ---------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupId:
    order: int
    tag: str  # "PSL2" | "PGL2" | "other"
    subfield_q: int | None  # q0 with the subgroup conjugate to PSL2/PGL2 over F_q0


def _closure_matrices(ctx: FqCtx, gens: list[Mat], cap: int | None = None):
    """Set closure of the projective images of gens; None when a cap is given
    and the closure grows past it."""
    ident = canonical_psl2(ctx, mat_identity(ctx))
    gens_c = [canonical_psl2(ctx, g) for g in gens]
    seen = {ident, *gens_c}
    frontier = list(seen - {ident})
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens_c:
                y = canonical_psl2(ctx, mat_mul(ctx, x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if cap is not None and len(seen) > cap:
            return None
        frontier = nxt
    return seen


def _in_standard_psl2(ctx: FqCtx, d: int, m: Mat) -> bool:
    """Is the canonical PSL2 element +-m conjugation-free inside the standard
    PSL2(F_(p^d)) copy (entries in the subfield, up to the global sign)?"""
    sub = _subfield_membership(ctx, d)
    if all(sub[x] for x in m):
        return True
    if ctx.p == 2:
        return False
    return all(sub[ctx.neg(x)] for x in m)


def _in_standard_pgl2(ctx: FqCtx, d0: int, m: Mat) -> bool:
    """Is +-m in the embedded PGL2(F_(p^d0)) (a scalar multiple of m has all
    entries in the subfield)?"""
    sub = _subfield_membership(ctx, d0)
    first = next(x for x in m if x != ctx.zero)
    s = ctx.inv(first)
    return all(sub[ctx.mul(s, x)] for x in m)


@lru_cache(maxsize=64)
def _subfield_membership_cached(p: int, r: int, d: int) -> tuple[bool, ...]:
    ctx = fq_ctx(p, r)
    return tuple(d % ctx.element_degree(x) == 0 for x in range(ctx.q))


def _subfield_membership(ctx: FqCtx, d: int):
    return _subfield_membership_cached(ctx.p, ctx.r, d)


_SUBGROUP_ORACLE_Q_MAX = 16


def subgroup_oracle(ctx: FqCtx, g1: Mat, g2: Mat) -> SubgroupId:
    """Closure of {+-g1, +-g2} in PSL2(F_q), tagged when it is a subfield
    subgroup: conjugate to the standard PSL2(F_(p^d)) or embedded
    PGL2(F_(p^d0)) copy, with an explicit conjugator as certificate.

    Conjugacy is taken in PGammaL2(F_q) (inner elements composed with the
    diagonal twist and Frobenius): subfield copies of a given kind can fall
    into several PSL2(F_q)-classes fused by the outer automorphisms, e.g. the
    two S4-classes of PSL2(F_9), and all of them count as subfield subgroups.
    """
    if ctx.q > _SUBGROUP_ORACLE_Q_MAX:
        raise guard_exceeded("q for subgroup oracle", ctx.q, _SUBGROUP_ORACLE_Q_MAX)
    S = _closure_matrices(ctx, [g1, g2])
    n = len(S)
    candidates: list[tuple[str, int, int]] = []
    for d in range(1, ctx.r + 1):
        if ctx.r % d == 0 and psl2_order(ctx.p**d) == n:
            candidates.append(("PSL2", ctx.p**d, d))
    for d0 in range(1, ctx.r // 2 + 1):
        if ctx.r % (2 * d0) == 0 and pgl2_order(ctx.p**d0) == n:
            # characteristic 2 embeds PGL2 = PSL2; covered above
            if ctx.p != 2:
                candidates.append(("PGL2", ctx.p**d0, d0))
    c1 = canonical_psl2(ctx, g1)
    c2 = canonical_psl2(ctx, g2)
    for tag, q0, d in candidates:
        member = (
            (lambda m: _in_standard_psl2(ctx, d, m))
            if tag == "PSL2"
            else (lambda m: _in_standard_pgl2(ctx, d, m))
        )
        for rep in outer_reps(ctx, "PSL2"):
            a1 = apply_auto(ctx, "PSL2", rep, c1)
            a2 = apply_auto(ctx, "PSL2", rep, c2)
            if member(a1) and member(a2):
                return SubgroupId(n, tag, q0)
            for h in _all_canonical_psl2(ctx):
                hi = mat_inv(ctx, h)
                b1 = mat_mul(ctx, mat_mul(ctx, h, a1), hi)
                if not member(canonical_psl2(ctx, b1)):
                    continue
                b2 = mat_mul(ctx, mat_mul(ctx, h, a2), hi)
                if member(canonical_psl2(ctx, b2)):
                    return SubgroupId(n, tag, q0)
    return SubgroupId(n, "other", None)


@lru_cache(maxsize=16)
def _all_canonical_psl2_cached(p: int, r: int) -> tuple[Mat, ...]:
    ctx = fq_ctx(p, r)
    return tuple(sorted({canonical_psl2(ctx, m) for m in sl2_elements_raw(ctx)}))


def _all_canonical_psl2(ctx: FqCtx):
    return _all_canonical_psl2_cached(ctx.p, ctx.r)


# -- classification ----------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveDetail:
    regular: bool
    kind: str  # "PSL2" | "PGL2"
    subfield_q: int


@dataclass(frozen=True)
class Classification:
    commutative: bool
    exceptional: bool
    projective: bool
    order_triple: tuple[int, int, int] | None
    projective_detail: ProjectiveDetail | None
    dform: int

    def to_json_dict(self) -> dict:
        flags = []
        if self.commutative:
            flags.append("Commutative")
        if self.exceptional:
            flags.append("Exceptional")
        if self.projective:
            flags.append("Projective")
        out = {
            "flags": flags,
            "order_triple": list(self.order_triple) if self.order_triple else None,
            "dform": self.dform,
        }
        if self.projective_detail is not None:
            out["projective_detail"] = {
                "regular": self.projective_detail.regular,
                "kind": self.projective_detail.kind,
                "subfield_q": self.projective_detail.subfield_q,
            }
        return out


def _projective_by_oracle(ctx: FqCtx, t: tuple[int, int, int]) -> bool:
    """Do all witnesses generate projective-linear subfield subgroups?"""
    for g1, g2 in witnesses_reduced(ctx, t):
        if subgroup_oracle(ctx, g1, g2).tag == "other":
            return False
    return True


def classify(ctx: FqCtx, t: tuple[int, int, int]) -> Classification:
    """Full classification of a trace triple.

    The projective flag needs the witness oracle only in the exceptional
    non-commutative overlap; everywhere else the trichotomy decides it.
    """
    cap = max_q_guard()
    if ctx.q > cap:
        raise guard_exceeded("q for classification", ctx.q, cap)
    d = dform(ctx, t)
    comm = is_commutative(ctx, t)
    if comm:
        candidates, comm_orders = _scan_order_data(ctx, t)
        orders = next(iter(comm_orders)) if len(comm_orders) == 1 else None
        exc = any(is_exceptional_order_triple(o) for o in candidates)
        return Classification(True, exc, False, orders, None, d)
    orders = triple_orders(ctx, construct_triple(ctx, t))
    exc = is_exceptional_order_triple(orders)
    if exc:
        projective = _projective_by_oracle(ctx, t)
    else:
        projective = True
    detail = None
    if projective:
        irr = is_irregular(ctx, t)
        dt = trace_field_degree(ctx, t)
        if not irr:
            detail = ProjectiveDetail(True, "PSL2", ctx.p**dt)
        else:
            # irregular: PSL2(F_p(t)) or PGL2(k0) with |k0| = p^(dt/2); one
            # witness decides, and a closure capped at |PGL2(k0)| keeps the
            # PSL2 answer cheap even when the full group is large
            q0 = ctx.p ** (dt // 2)
            g1, g2 = next(witnesses_reduced(ctx, t))
            S = _closure_matrices(ctx, [g1, g2], cap=pgl2_order(q0))
            if S is None:
                detail = ProjectiveDetail(False, "PSL2", ctx.p**dt)
            else:
                assert len(S) == pgl2_order(q0)
                detail = ProjectiveDetail(False, "PGL2", q0)
    return Classification(False, exc, projective, orders, detail, d)


# -- triples up to signs -------------------------------------------------------------


def sign_class_rep(ctx: FqCtx, t: tuple[int, int, int]) -> tuple[int, int, int]:
    """Canonical representative of {(+-t1, +-t2, +-t3)}: the coordinate-wise
    smaller encoding of each +-t_i."""
    return tuple(min(x, ctx.neg(x)) for x in t)  # type: ignore[return-value]


def even_sign_lifts(ctx: FqCtx, t: tuple[int, int, int]):
    t1, t2, t3 = t
    n1, n2, n3 = (ctx.neg(x) for x in t)
    return [(t1, t2, t3), (t1, n2, n3), (n1, t2, n3), (n1, n2, t3)]


@dataclass(frozen=True)
class SignClassification:
    commutative: bool
    exceptional: bool
    projective: bool  # all lifts projective
    partly_projective: bool  # some lift projective
    order_triple: tuple[int, int, int] | None


def classify_up_to_signs(ctx: FqCtx, t: tuple[int, int, int]) -> SignClassification:
    """Classification of the trace triple up to signs containing t.

    The eight sign lifts fall into two parity classes sharing all flags, so
    classifying t and one odd flip covers everything.
    """
    even = classify(ctx, t)
    t_odd = (ctx.neg(t[0]), t[1], t[2])
    if t_odd in even_sign_lifts(ctx, t):
        odd = even
    else:
        odd = classify(ctx, t_odd)
    orders = None
    if not (even.commutative or odd.commutative):
        assert even.order_triple == odd.order_triple
        orders = even.order_triple
    return SignClassification(
        commutative=even.commutative or odd.commutative,
        exceptional=even.exceptional or odd.exceptional,
        projective=even.projective and odd.projective,
        partly_projective=even.projective or odd.projective,
        order_triple=orders,
    )


# -- orbit counts ---------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCounts:
    d_r: int  # |Sigma(C)/Inn(G)| (or an upper bound)
    d_wr: int  # |Sigma(C)/Aut(G)| (or an upper bound)
    exact: bool

    def to_json_dict(self) -> dict:
        return {"d_r": self.d_r, "d_wr": self.d_wr, "exact": self.exact}


def orbit_counts_theoretical(
    p: int, orders: tuple[int, int, int], p_divides_abc: bool, kind: str
) -> OrbitCounts:
    """The six-row table of orbit counts for a partly projective,
    non-exceptional trace triple up to signs with full trace field."""
    o = tuple(sorted(orders))
    if is_exceptional_order_triple(o):
        raise TridentError(
            "hypothesis_violated",
            f"order triple {o} is exceptional; the orbit table does not apply",
            orders=list(o),
        )
    a = o[0]
    if p == 2:
        return OrbitCounts(1, 1, True)
    if a == 2:
        if p_divides_abc:
            return OrbitCounts(1, 1, True)
        if kind == "PGL2":
            return OrbitCounts(1, 1, True)
        return OrbitCounts(2, 1, True)
    if p_divides_abc or kind == "PGL2":
        return OrbitCounts(2, 2, False)
    return OrbitCounts(4, 2, False)


_ORACLE_Q_MAX = 13


@lru_cache(maxsize=32)
def _class_elements(p: int, r: int, kind: str):
    ctx = fq_ctx(p, r)
    elems, _, _ = group_table(ctx, kind)
    out: dict = {}
    for i, m in enumerate(elems):
        out.setdefault(conj_class_id(ctx, kind, m), []).append(i)
    return out


def class_elements(ctx: FqCtx, kind: str):
    """Indices into the group table's element list, per conjugacy class."""
    return _class_elements(ctx.p, ctx.r, kind)


def orbit_counts_oracle(ctx: FqCtx, class_triple) -> OrbitCounts:
    """Exact orbit counts of Sigma(C) under Inn(G) and Aut(G) by enumeration.

    Inn-orbits: fix g1 as the first element of C1 (Inn is transitive on C1),
    collect valid g2, and count centralizer orbits.  Aut-orbits: merge
    Inn-orbits under the outer representatives that stabilize the class
    triple.
    """
    if ctx.q > _ORACLE_Q_MAX:
        raise guard_exceeded("q for orbit oracle", ctx.q, _ORACLE_Q_MAX)
    kind = class_triple[0].group
    assert all(c.group == kind for c in class_triple)
    elems, index, table = group_table(ctx, kind)
    n = len(elems)
    by_class = class_elements(ctx, kind)
    c1, c2, c3 = class_triple
    ident = identity_index(ctx, kind)
    inv = np.empty(n, dtype=np.int64)
    for i in range(n):
        inv[i] = index[canonical(ctx, kind, mat_inv(ctx, elems[i]))]
    c3_set = set(by_class[c3])
    x0 = by_class[c1][0]
    valid = []
    for y in by_class[c2]:
        if int(inv[table[x0, y]]) not in c3_set:
            continue
        if len(closure(table, [x0, y], ident)) == n:
            valid.append(y)
    if not valid:
        return OrbitCounts(0, 0, True)
    # centralizer of x0
    cent = [h for h in range(n) if table[x0, h] == table[h, x0]]
    orbit_of: dict[int, int] = {}
    reps: list[int] = []
    for y in valid:
        if y in orbit_of:
            continue
        k = len(reps)
        reps.append(y)
        for h in cent:
            hy = table[table[h, y], int(inv[h])]
            orbit_of[int(hy)] = k
    d_r = len(reps)

    # merge under outer automorphisms stabilizing the class triple
    parent = list(range(d_r))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    for rep in outer_reps(ctx, kind):
        if rep == (0, False):
            continue
        ax0 = index[apply_auto(ctx, kind, rep, elems[x0])]
        if conj_class_id(ctx, kind, elems[ax0]) != c1:
            continue
        # normalize the image of x0 back to x0
        h_norm = None
        for h in range(n):
            if table[table[h, ax0], int(inv[h])] == x0:
                h_norm = h
                break
        assert h_norm is not None
        for k, y in enumerate(reps):
            ay = index[apply_auto(ctx, kind, rep, elems[y])]
            y2 = int(table[table[h_norm, ay], int(inv[h_norm])])
            if y2 in orbit_of:
                union(k, orbit_of[y2])
    d_wr = len({find(i) for i in range(d_r)})
    return OrbitCounts(d_r, d_wr, True)


def class_triples_with_orders(ctx: FqCtx, kind: str, orders: tuple[int, int, int]):
    """All conjugacy class triples (sorted by class data) whose projective
    orders match the given sorted order triple."""
    by_class = class_elements(ctx, kind)
    a, b, c = sorted(orders)
    out = []
    for ca in by_class:
        if ca.order != a:
            continue
        for cb in by_class:
            if cb.order != b:
                continue
            for cc in by_class:
                if cc.order == c:
                    out.append((ca, cb, cc))
    return out


# -- full census over F_q -------------------------------------------------------------


def macbeath_census(ctx: FqCtx):
    """Classification of all q^3 trace triples, with the commutative flag
    taken from the witness oracle.  Rows: (t, bucket, orders), bucket by the
    precedence commutative > exceptional > projective."""
    rows = []
    for t1 in range(ctx.q):
        for t2 in range(ctx.q):
            for t3 in range(ctx.q):
                t = (t1, t2, t3)
                cls = classify(ctx, t)
                comm_oracle = is_commutative_oracle(ctx, t)
                assert comm_oracle == cls.commutative, t
                if cls.commutative:
                    bucket = "commutative"
                elif cls.exceptional:
                    bucket = "exceptional"
                else:
                    assert cls.projective, t
                    bucket = "projective"
                rows.append((t, bucket, cls.order_triple))
    return rows
