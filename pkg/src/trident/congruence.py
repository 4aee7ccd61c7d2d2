"""The prime-level engine: reduce the lambda system modulo a prime, decide
PSL2 versus PGL2, build explicit generating triples over F_q, and report
genera and fields of moduli for the congruence cover X(a,b,c; p) and its
quotient tower X -> X_1 -> X_0 -> P^1.

Entry conventions: a triple entry oo marks a parabolic generator; its
ramification index sharpens to p.  An input entry equal to p is the same
datum written multiplicatively and is rewritten to oo before reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime, n_order

from .cyclotomic import INF, lam, lam2
from .errors import (
    TridentError,
    guard_exceeded,
    infinite_order,
    non_hyperbolic,
    ramified_prime,
)
from .fields import (
    D_pprime,
    E_field,
    F_field,
    F_pprime,
    adjoin_sqrt_pstar,
    field_of_lambda,
    splits_completely_in_F_over_E,
)
from .macbeath import (
    classify,
    construct_triple,
    dform,
    is_exceptional_order_triple,
    triple_orders,
)
from .projective import (
    FqCtx,
    Mat,
    closure,
    conj_class_id,
    element_order,
    find_root_in_ctx,
    fq_ctx,
    group_label,
    group_order,
    group_table,
    identity_index,
    max_q_guard,
    pgl2_order,
    psl2_order,
    subfield_embedding,
)
from .triangle import (
    admissible_prime,
    classify_triple,
    genus_from_order,
    is_hyperbolic,
    validate_triple,
)

# work fields for the root-of-unity construction stay enumerable
_WORK_Q_CAP = 1 << 16
# coset tables for standard groups stay materializable
_GROUP_CAP = 3000


# -- triple normal forms -------------------------------------------------------------


def sharp_triple(t, p: int) -> tuple[int, int, int]:
    """Ramification orders (a#, b#, c#): oo sharpens to p."""
    t = validate_triple(t)
    return tuple(p if s == INF else int(s) for s in t)


def construction_triple(t, p: int):
    """The form fed to the lambda machinery: entries equal to p become oo.

    Entries divisible by p but not equal to it are left alone; admissibility
    rejects them downstream.
    """
    t = validate_triple(t)
    return tuple(INF if s == p else s for s in t)


def _triple_json(t) -> list:
    return ["oo" if s == INF else int(s) for s in t]


# -- lambda reduction ----------------------------------------------------------------


def _poly_eval(coeffs, x: int, ctx: FqCtx) -> int:
    acc = ctx.zero
    for co in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), ctx.scalar(co))
    return acc


def _int_poly_mod_p(elt, p: int) -> list[int]:
    out = []
    for co in elt.minimal_polynomial():
        assert co.denominator == 1, "lambda minimal polynomial is monic integral"
        out.append(int(co) % p)
    return out


def reduce_lambda_mod_p(s, p: int, target_ctx: FqCtx) -> int:
    """First root in target_ctx of the minimal polynomial of lambda_s mod p.

    Picking a root amounts to picking a prime above p; the choices are
    Galois conjugate, and the first one in enumeration order keeps output
    stable.
    """
    if s == INF:
        return target_ctx.scalar(2)
    s = int(s)
    if s % p == 0:
        raise ramified_prime(p, s)
    d = field_of_lambda(s).frobenius_order(p)
    if target_ctx.r % d != 0:
        raise TridentError(
            "degree_mismatch",
            f"lambda_{s} mod {p} generates a degree-{d} field, "
            f"which F_{target_ctx.q} does not contain",
            s=s,
            p=p,
            needed_degree=d,
            target_degree=target_ctx.r,
        )
    root = find_root_in_ctx(_int_poly_mod_p(lam(s), p), target_ctx)
    assert root is not None, "root count of an unramified reduction"
    return root


@dataclass(frozen=True)
class ReducedLambdas:
    """Images of the full lambda system modulo one common prime above p.

    ctx_small is the residue field F_p of E(a,b,c) and ctx_big that of
    F(a,b,c) (equal or a quadratic extension).  Doubled-index images live in
    ctx_big; plain images and the product image live in ctx_small.  All of
    them come from one root of unity, hence from a single prime, which is
    what makes the doubling identity hold across the board.
    root_indices records, per entry, the position of the doubled image among
    the roots of its minimal polynomial in enumeration order (None for oo).
    """

    triple: tuple
    p: int
    ctx_small: FqCtx
    ctx_big: FqCtx
    lam2_images: tuple[int, int, int]
    lam_images: tuple[int, int, int]
    lam2_product: int
    root_indices: tuple

    @property
    def trace_triple(self) -> tuple[int, int, int]:
        """Traces of the standard lifted generator triple: the sign flip on
        the first coordinate is what makes a product-one triple exist."""
        l2 = self.lam2_images
        return (self.ctx_big.neg(l2[0]), l2[1], l2[2])


def reduce_triple(t, p: int) -> ReducedLambdas:
    """Reduce every lambda attached to (a,b,c) modulo one prime above p."""
    t = validate_triple(t)
    if not isprime(p):
        raise TridentError("invalid_prime", f"p must be prime, got {p}", p=p)
    finite = sorted({int(s) for s in t if s != INF})
    for s in finite:
        if s % p == 0:
            raise ramified_prime(p, s)

    rE = E_field(t).frobenius_order(p)
    rF = F_field(t).frobenius_order(p)
    assert rF % rE == 0 and rF // rE in (1, 2), "F/E is at most quadratic"
    ctx_small = fq_ctx(p, rE)
    ctx_big = fq_ctx(p, rF)

    M = 1
    for s in finite:
        M = math.lcm(M, 2 * s)
    while M % p == 0:
        M //= p
    m = 1 if M <= 2 else int(n_order(p, M))
    assert m % rF == 0 and m // rF in (1, 2), "root-of-unity field over F"
    if p**m > _WORK_Q_CAP:
        raise guard_exceeded("work field size for lambda reduction", p**m, _WORK_Q_CAP)
    work = ctx_big if m == rF else fq_ctx(p, m)
    omega = work.pow_el(work.primitive_element(), (work.q - 1) // M) if M > 1 else work.one

    def zeta_image(k: int) -> int:
        # mu_{p^e} collapses to 1 in characteristic p, so split off the
        # p-part: zeta_k = zeta_{p^e}^v zeta_{k'}^u with u p^e = 1 mod k'
        kp = k
        while kp % p == 0:
            kp //= p
        if kp == 1:
            return work.one
        u = pow(k // kp, -1, kp)
        return work.pow_el(omega, (M // kp) * u)

    def lam_index_image(k) -> int:
        if k == INF:
            return work.scalar(2)
        z = zeta_image(int(k))
        return work.add(z, work.inv(z))

    l2_work = tuple(lam_index_image(INF if s == INF else 2 * int(s)) for s in t)
    l1_work = tuple(lam_index_image(s) for s in t)
    prod_work = work.mul(work.mul(l2_work[0], l2_work[1]), l2_work[2])

    def down_map(ctx_to: FqCtx, what: str):
        if ctx_to.r == work.r:
            return lambda x: x
        emb = subfield_embedding(ctx_to, work)
        rev = {emb(x): x for x in range(ctx_to.q)}

        def f(x: int) -> int:
            assert x in rev, f"{what} lands in the declared residue field"
            return rev[x]

        return f

    to_big = down_map(ctx_big, "doubled lambda image")
    to_small = down_map(ctx_small, "plain lambda image")
    lam2_images = tuple(to_big(x) for x in l2_work)
    lam_images = tuple(to_small(x) for x in l1_work)
    lam2_product = to_small(prod_work)

    up = subfield_embedding(ctx_small, ctx_big)
    root_indices = []
    for i, s in enumerate(t):
        sq = ctx_big.mul(lam2_images[i], lam2_images[i])
        assert sq == ctx_big.add(up(lam_images[i]), ctx_big.scalar(2)), (
            "doubling identity lambda_2s^2 = lambda_s + 2"
        )
        if s == INF:
            root_indices.append(None)
            continue
        poly2 = _int_poly_mod_p(lam2(int(s)), p)
        roots = [x for x in range(ctx_big.q) if _poly_eval(poly2, x, ctx_big) == 0]
        assert lam2_images[i] in roots, "doubled image roots its minimal polynomial"
        root_indices.append(roots.index(lam2_images[i]))
        poly1 = _int_poly_mod_p(lam(int(s)), p)
        assert _poly_eval(poly1, lam_images[i], ctx_small) == 0, (
            "plain image roots its minimal polynomial"
        )

    return ReducedLambdas(
        triple=t,
        p=p,
        ctx_small=ctx_small,
        ctx_big=ctx_big,
        lam2_images=lam2_images,
        lam_images=lam_images,
        lam2_product=lam2_product,
        root_indices=tuple(root_indices),
    )


# -- generating triples in the standard groups ---------------------------------------


@dataclass(frozen=True)
class GeneratorTriple:
    """Three matrices with product 1 generating the congruence image.

    ctx is where the entries live; for a PGL2 image built from traces this
    is the quadratic extension F_{q^2}, and q records the field the group is
    really defined over.
    """

    ctx: FqCtx
    kind: str  # "PSL2" | "PGL2"
    q: int
    mats: tuple[Mat, Mat, Mat]


@lru_cache(maxsize=None)
def _group_search_data(kind: str, q: int):
    fac = factorint(q)
    assert len(fac) == 1, "q must be a prime power"
    ((p, r),) = fac.items()
    ctx = fq_ctx(p, r)
    elems, index, table = group_table(ctx, kind)
    n = len(elems)
    ident = identity_index(ctx, kind)
    inv_of = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(table == ident)
    inv_of[rows] = cols
    orders = [element_order(ctx, kind, m) for m in elems]
    grouped: dict = {}
    for i, m in enumerate(elems):
        grouped.setdefault(conj_class_id(ctx, kind, m), []).append(i)
    by_order: dict[int, list[list[int]]] = {}
    for cid, members in sorted(grouped.items(), key=lambda kv: kv[1][0]):
        by_order.setdefault(cid.order, []).append(members)
    return ctx, elems, table, ident, inv_of, orders, by_order


@lru_cache(maxsize=None)
def group_generator_triple(
    kind: str, q: int, orders: tuple[int, int, int]
) -> GeneratorTriple | None:
    """Deterministic product-one generating triple with the given projective
    element orders in the standard group, or None when no such triple
    generates.  The first factor is pinned to a class representative; the
    second sweeps its whole class, which covers every triple up to
    conjugacy.
    """
    if group_order(kind, q) > _GROUP_CAP:
        raise guard_exceeded("group order for triple search", group_order(kind, q), _GROUP_CAP)
    ctx, elems, table, ident, inv_of, ordlist, by_order = _group_search_data(kind, q)
    n = len(elems)
    a, b, c = orders
    for class_a in by_order.get(a, []):
        i = class_a[0]
        for class_b in by_order.get(b, []):
            for j in class_b:
                k = int(inv_of[int(table[i, j])])
                if ordlist[k] != c:
                    continue
                if len(closure(table, [i, j], ident)) == n:
                    return GeneratorTriple(ctx, kind, q, (elems[i], elems[j], elems[k]))
    return None


# -- curve reports -------------------------------------------------------------------


@dataclass(frozen=True)
class CurveReport:
    """Everything the prime-level theorems say about X(a,b,c; p).

    triple keeps the parabolic (oo) form actually reduced; ramification is
    its sharpened, all-finite companion.  Field entries are pretty-printed
    abelian fields: F and E for the sharpened triple, the Frobenius-fixed
    D-field under M(X,f), and the D-field with sqrt(p*) adjoined when the
    odd-ramification condition calls for it under M(X,f,G).  d_Xf and d_XfG
    are the degree bounds over those bases, already collapsed to 1 when a
    collapse condition applies.
    """

    triple: tuple
    p: int
    group_kind: str
    group_label: str
    q: int
    r: int
    group_order: int
    ramification: tuple[int, int, int]
    genus: int
    genus_X0: int | None
    field_F: str
    field_E: str
    field_D_frob: str
    field_D_sqrt: str
    d_Xf: int
    d_XfG: int
    validated: bool

    def to_json_dict(self) -> dict:
        return {
            "triple": _triple_json(self.triple),
            "p": self.p,
            "group": {
                "kind": self.group_kind,
                "label": self.group_label,
                "q": self.q,
                "r": self.r,
                "order": self.group_order,
            },
            "ramification": list(self.ramification),
            "genus": self.genus,
            "genus_X0": self.genus_X0,
            "fields": {
                "F": self.field_F,
                "E": self.field_E,
                "D_frob": self.field_D_frob,
                "D_sqrt": self.field_D_sqrt,
            },
            "degree_bounds": {"X_f": self.d_Xf, "X_f_G": self.d_XfG},
            "validated": self.validated,
        }


def _is_char2_collapse(t) -> bool:
    """Shapes whose reduced trace triple degenerates in characteristic 2:
    one parabolic entry next to an equal pair, or all three parabolic."""
    inf_count = sum(1 for s in t if s == INF)
    if inf_count == 3:
        return True
    if inf_count == 1:
        fin = sorted(int(s) for s in t if s != INF)
        return fin[0] == fin[1]
    return False


def theorem_a(t, p: int) -> CurveReport:
    """Group kind, size, and genus of the congruence cover at p.

    The verdict is field-theoretic: the kind comes from whether p splits
    completely in F over E, the size from the residue degree of F.  When the
    reduced trace triple is small enough to enumerate, the Macbeath
    classification of that triple is run as a cross-check and `validated` is
    set; the characteristic-2 collapse shapes skip the trace-level check and
    are witnessed by a generating triple in the standard group instead.
    """
    t = validate_triple(t)
    if not is_hyperbolic(t):
        raise non_hyperbolic(t, classify_triple(t))
    adm = admissible_prime(t, p)
    if not adm.ok:
        raise TridentError(
            "inadmissible_prime",
            f"p = {p} is inadmissible for {tuple(t)}: {adm.reason}",
            triple=_triple_json(t),
            p=p,
            reason=adm.reason,
        )
    sharp = sharp_triple(t, p)
    split = splits_completely_in_F_over_E(t, p)
    r = F_pprime(sharp, p).frobenius_order(p)
    rE = E_field(t).frobenius_order(p)
    assert r % rE == 0 and r // rE in (1, 2)
    assert split == (r == rE), "splitting matches the residue degree drop"
    q = p**rE
    kind = "PSL2" if split else "PGL2"
    order = group_order(kind, q)
    genus = genus_from_order(sharp, order)
    label = group_label(kind, q)

    # field columns follow the sharpened triple; a parabolic input whose
    # sharpened form leaves the hyperbolic range (the classical genus 0 and 1
    # covers) falls back to the parabolic form it was computed from
    col = sharp if is_hyperbolic(sharp) else t
    F = F_field(col)
    E = E_field(col)
    D_base = D_pprime(sharp, p)
    D_frob = D_base.fixed_field_of_frobenius(p)
    p_divides = any(s % p == 0 for s in sharp)
    if p_divides and p % 2 == 1 and r % 2 == 1 and kind == "PSL2":
        D_sqrt = adjoin_sqrt_pstar(D_base, p)
    else:
        D_sqrt = D_base
    d_Xf = 1 if (2 in sharp or q % 2 == 0) else 2
    d_XfG = 1 if (q % 2 == 0 or p_divides or kind == "PGL2") else 2

    gen = None
    if order <= _GROUP_CAP and q <= max_q_guard():
        gen = group_generator_triple(kind, q, sharp)
        assert gen is not None, "a generating triple with the sharp orders exists"
    genus_X0 = genus_of_quotient(gen, "Borel") if gen is not None else None

    validated = False
    if p**r <= max_q_guard():
        rl = reduce_triple(t, p)
        tau = rl.trace_triple
        if dform(rl.ctx_big, tau) == 0:
            # only the characteristic-2 collapse shapes get here; their
            # existence is already witnessed at the group level by gen
            assert p == 2 and _is_char2_collapse(t), "collapse shapes are classified"
        elif is_exceptional_order_triple(sharp) and p**r > 16:
            pass  # deciding these needs the subgroup oracle, out of range here
        else:
            cls = classify(rl.ctx_big, tau)
            assert not cls.commutative, "reduced trace triple is noncommutative"
            assert cls.projective, "reduced trace triple is projective"
            assert tuple(sorted(cls.order_triple)) == tuple(sorted(sharp))
            det = cls.projective_detail
            assert det is not None and (det.kind, det.subfield_q) == (kind, q)
            validated = True

    return CurveReport(
        triple=t,
        p=p,
        group_kind=kind,
        group_label=label,
        q=q,
        r=r,
        group_order=order,
        ramification=sharp,
        genus=genus,
        genus_X0=genus_X0,
        field_F=F.pretty(),
        field_E=E.pretty(),
        field_D_frob=D_frob.pretty(),
        field_D_sqrt=D_sqrt.pretty(),
        d_Xf=d_Xf,
        d_XfG=d_XfG,
        validated=validated,
    )


def theorem_b_report(t, p: int) -> CurveReport:
    """The moduli report for a Belyi triple: all entries finite, entries
    equal to p rewritten to oo before reduction."""
    t = validate_triple(t)
    if any(s == INF for s in t):
        raise infinite_order("moduli report input orders")
    return theorem_a(construction_triple(t, p), p)


def explicit_generators(t, p: int) -> GeneratorTriple:
    """A product-one generating triple over F_P with traces
    (-lambda_2a, lambda_2b, lambda_2c).

    For the characteristic-2 collapse shapes no triple has both those traces
    and the right orders, so the fallback is a generating triple with the
    sharp orders in the standard group.
    """
    construction = construction_triple(t, p)
    rep = theorem_a(construction, p)
    sharp = rep.ramification
    big_q = p**rep.r
    if big_q > max_q_guard():
        raise guard_exceeded("q for explicit generators", big_q, max_q_guard())
    rl = reduce_triple(construction, p)
    if dform(rl.ctx_big, rl.trace_triple) == 0:
        gen = group_generator_triple(rep.group_kind, rep.q, sharp)
        assert gen is not None
        return gen
    mats = construct_triple(rl.ctx_big, rl.trace_triple)
    assert triple_orders(rl.ctx_big, mats) == sharp
    return GeneratorTriple(rl.ctx_big, rep.group_kind, rep.q, mats)


# -- quotient genera via coset actions ------------------------------------------------

_DESCRIPTORS = {
    "borel": "borel",
    "unipotent-stabilizer": "unipotent",
    "unipotent": "unipotent",
    "point-stabilizer": "point",
    "point": "point",
    "regular": "point",
}


def _moebius_perm(ctx: FqCtx, m: Mat) -> list[int]:
    """Permutation of P^1(F_q): points are x for [x:1] and q for [1:0]."""
    a, b, c, d = m
    out = []
    for i in range(ctx.q + 1):
        x, y = (i, ctx.one) if i < ctx.q else (ctx.one, ctx.zero)
        u = ctx.add(ctx.mul(a, x), ctx.mul(b, y))
        v = ctx.add(ctx.mul(c, x), ctx.mul(d, y))
        out.append(ctx.div(u, v) if v != 0 else ctx.q)
    return out


def _orbit_permutations(gen: GeneratorTriple) -> list[tuple[int, ...]]:
    """The three generators as permutations of their unique orbit of size
    q + 1 on the ambient projective line."""
    ctx = gen.ctx
    raw = [_moebius_perm(ctx, m) for m in gen.mats]
    npts = ctx.q + 1
    seen = [False] * npts
    target = None
    for start in range(npts):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        head = 0
        while head < len(orbit):
            x = orbit[head]
            head += 1
            for pm in raw:
                y = pm[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
        if len(orbit) == gen.q + 1:
            assert target is None, "orbit of size q + 1 is unique"
            target = sorted(orbit)
    if target is None:
        raise TridentError(
            "non_transitive",
            "generators have no orbit of size q + 1 on the projective line",
            q=gen.q,
            ambient_q=ctx.q,
        )
    relabel = {pt: i for i, pt in enumerate(target)}
    return [tuple(relabel[pm[pt]] for pt in target) for pm in raw]


def _perm_group(gens: list[tuple[int, ...]], expected: int) -> set[tuple[int, ...]]:
    npts = len(gens[0])
    ident = tuple(range(npts))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = tuple(h[v] for v in g)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
                    if len(seen) > expected:
                        raise TridentError(
                            "non_transitive",
                            "permutation closure exceeds the declared group order",
                            expected=expected,
                        )
        frontier = nxt
    return seen


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


def _perm_order(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    out = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        out = math.lcm(out, n)
    return out


def _rh_genus(n: int, cycle_counts: list[int]) -> int:
    two_g_minus_2 = -2 * n + sum(n - c for c in cycle_counts)
    assert two_g_minus_2 % 2 == 0, "Riemann-Hurwitz parity"
    g = (two_g_minus_2 + 2) // 2
    assert g >= 0, "nonnegative quotient genus"
    return g


def genus_of_quotient(gen: GeneratorTriple, descriptor: str) -> int:
    """Genus of the quotient of the cover by the named subgroup, by
    Riemann-Hurwitz over the coset permutation action of the three
    generators.

    Borel is the degree q + 1 action on the projective line; the unipotent
    stabilizer has index |G| / q; a point of the cover has trivial
    stabilizer, so point-stabilizer means the regular action and returns the
    genus of the cover itself.
    """
    key = _DESCRIPTORS.get(descriptor.strip().lower())
    if key is None:
        raise TridentError(
            "unknown_descriptor",
            f"subgroup descriptor {descriptor!r} not recognized",
            descriptor=descriptor,
            known=sorted(_DESCRIPTORS),
        )
    if gen.q > max_q_guard():
        raise guard_exceeded("q for coset enumeration", gen.q, max_q_guard())
    perms = _orbit_permutations(gen)
    if key == "borel":
        return _rh_genus(gen.q + 1, [_cycle_count(pm) for pm in perms])

    full = group_order(gen.kind, gen.q)
    grp = _perm_group(perms, full)
    if len(grp) != full:
        raise TridentError(
            "non_transitive",
            "generators do not generate the full group",
            expected=full,
            got=len(grp),
        )
    if key == "point":
        counts = [full // _perm_order(pm) for pm in perms]
        return _rh_genus(full, counts)

    # unipotent stabilizer of the base point: the elements whose only fixed
    # point is the first orbit point, plus the identity
    npts = gen.q + 1
    ident = tuple(range(npts))
    U = [g for g in grp if g == ident or [i for i in range(npts) if g[i] == i] == [0]]
    assert len(U) == gen.q, "unipotent stabilizer has order q"
    coset_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for g in grp:
        coset_of[g] = min(tuple(g[u[i]] for i in range(npts)) for u in U)
    reps = sorted(set(coset_of.values()))
    rep_index = {rep: i for i, rep in enumerate(reps)}
    n = full // gen.q
    assert len(reps) == n
    counts = []
    for pm in perms:
        image = [0] * n
        for rep in reps:
            moved = tuple(pm[rep[i]] for i in range(npts))
            image[rep_index[rep]] = rep_index[coset_of[moved]]
        counts.append(_cycle_count(tuple(image)))
    return _rh_genus(n, counts)


# -- composite level orders -----------------------------------------------------------


def p_group_orders(p: int, split: bool, e: int = 1) -> int:
    """|PSL2(Z/p^e)| when split, else |PGL2(Z/p^e)|: reduction to e = 1 has
    kernel of order p^(3(e-1))."""
    if not isprime(p):
        raise TridentError("invalid_prime", f"p must be prime, got {p}", p=p)
    if e < 1:
        raise TridentError("invalid_exponent", "level exponent must be at least 1", e=e)
    base = psl2_order(p) if split else pgl2_order(p)
    return p ** (3 * (e - 1)) * base


def P_N_order(factors) -> int:
    """Order of the composite-level group: the product over prime power
    levels (p, split, e), primes distinct."""
    out = 1
    primes = []
    for p, split, e in factors:
        primes.append(p)
        out *= p_group_orders(p, bool(split), int(e))
    if len(set(primes)) != len(primes):
        raise TridentError(
            "repeated_prime",
            "composite level needs distinct residue characteristics",
            primes=primes,
        )
    return out


def surjectivity_transfer_guaranteed(p: int) -> bool:
    """Generator lifting from prime level to prime-power level is automatic
    only in residue characteristic at least 5; orders are still exact for
    p = 2 and 3."""
    return p >= 5
