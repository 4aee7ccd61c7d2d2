"""Finite fields F_q and the groups PSL2(F_q), PGL2(F_q).

Field elements are integers 0..q-1, the little-endian base-p digit encoding of
polynomial coefficients modulo a deterministic irreducible monic modulus (the
first irreducible candidate in the same integer encoding, so every run of
every process picks the same field presentation).  Small fields (q <= 4096)
get numpy lookup tables; larger fields fall back to generic polynomial
arithmetic, which the congruence machinery uses for residue fields of large
degree.

Matrices are 4-tuples (a, b, c, d) of encoded field elements.  PSL2 elements
are det-1 matrices up to sign, canonicalized to the lexicographically smaller
of {m, -m}.  PGL2 elements are invertible matrices up to scalars; for odd q
the canonical form scales the first nonzero entry to 1, and for even q (where
PGL2 = PSL2 = SL2) the canonical form scales the determinant to 1, so the two
kinds share representations in characteristic 2.

Conjugacy classes carry a structural id: identity / unipotent / split
(eigenvalues in F_q) / nonsplit, together with the trace datum ({t, -t} for
PSL2, theta = tr^2/det for PGL2), the projective order, and for odd-q PSL2
unipotents the square class that separates the two unipotent classes.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import TridentError, guard_exceeded
from .fields import AbelianField, field_of_lambda, sqrt_pstar_field

_TABLE_Q_MAX = 4096


def max_q_guard() -> int:
    """Enumeration guard for brute-force work, overridable via TRIDENT_MAX_Q."""
    try:
        return int(os.environ.get("TRIDENT_MAX_Q", "64"))
    except ValueError:
        return 64


# -- polynomial arithmetic over F_p (tuples, ascending coefficients) -----------


def _pmod(a: list[int], f: tuple[int, ...], p: int) -> list[int]:
    """a mod f with f monic."""
    a = a[:]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
        a[i] = 0
    out = [x % p for x in a[:df]]
    return out + [0] * (df - len(out))


def _pmul_mod(a: list[int], b: list[int], f: tuple[int, ...], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppow_mod(a: list[int], e: int, f: tuple[int, ...], p: int) -> list[int]:
    result = [1] + [0] * (len(f) - 2)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmul_mod(result, base, f, p)
        base = _pmul_mod(base, base, f, p)
        e >>= 1
    return result


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    r = len(f) - 1
    if r == 1:
        return True
    x = [0, 1]
    xq = _ppow_mod(x, p**r, f, p)
    if xq != _pmod(x, f, p):
        return False
    for ell in factorint(r):
        xe = _ppow_mod(x, p ** (r // ell), f, p)
        diff = [(a - b) % p for a, b in zip(xe, _pmod(x, f, p))]
        if _pgcd_nonconstant(diff, list(f), p):
            return False
    return True


def _pgcd_nonconstant(a: list[int], b: list[int], p: int) -> bool:
    """Does gcd(a, b) have positive degree?"""

    def trim(v):
        while v and v[-1] % p == 0:
            v.pop()
        return v

    a, b = trim([x % p for x in a]), trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = (a[-1] * inv) % p
            off = len(a) - len(b)
            for j in range(len(b)):
                a[off + j] = (a[off + j] - c * b[j]) % p
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) > 1


class FqCtx:
    """Arithmetic context for F_q, q = p^r, with deterministic modulus."""

    def __init__(self, p: int, r: int):
        if not isprime(p):
            raise TridentError("invalid_prime", f"p must be prime, got {p}", p=p)
        if r < 1:
            raise TridentError("invalid_degree", f"degree must be >= 1, got {r}", r=r)
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = self._find_modulus(p, r)
        self._tables_built = False
        self._lock = threading.Lock()

    @staticmethod
    def _find_modulus(p: int, r: int) -> tuple[int, ...]:
        """First irreducible monic of degree r by the integer encoding of the
        non-leading coefficients."""
        if r == 1:
            return (0, 1)
        for e in range(p**r):
            body = FqCtx._digits(e, p, r)
            f = tuple(body) + (1,)
            if _is_irreducible(f, p):
                return f
        raise AssertionError("no irreducible polynomial found")

    @staticmethod
    def _digits(e: int, p: int, r: int) -> list[int]:
        out = []
        for _ in range(r):
            out.append(e % p)
            e //= p
        return out

    def encode(self, coeffs) -> int:
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + (c % self.p)
        return e

    def decode(self, x: int) -> list[int]:
        return self._digits(x, self.p, self.r)

    # -- scalar operations --------------------------------------------------

    def _ensure_tables(self) -> None:
        if self._tables_built or self.q > _TABLE_Q_MAX:
            return
        with self._lock:
            if self._tables_built:
                return
            p, q = self.p, self.q
            if self.r == 1:
                idx = np.arange(q, dtype=np.int64)
                self.add_t = ((idx[:, None] + idx[None, :]) % p).astype(np.int32)
                self.mul_t = ((idx[:, None] * idx[None, :]) % p).astype(np.int32)
            else:
                polys = [self.decode(x) for x in range(q)]
                add = np.zeros((q, q), dtype=np.int32)
                mul = np.zeros((q, q), dtype=np.int32)
                for x in range(q):
                    px = polys[x]
                    for y in range(x, q):
                        py = polys[y]
                        s = self.encode([(a + b) % p for a, b in zip(px, py)])
                        add[x, y] = add[y, x] = s
                        m = self.encode(_pmul_mod(px, py, self.modulus, p))
                        mul[x, y] = mul[y, x] = m
                self.add_t = add
                self.mul_t = mul
            neg = np.zeros(q, dtype=np.int32)
            inv = np.zeros(q, dtype=np.int32)
            for x in range(q):
                neg[x] = self._neg_generic(x)
            for x in range(1, q):
                inv[x] = self._inv_generic(x)
            self.neg_t = neg
            self.inv_t = inv
            self._tables_built = True

    def _add_generic(self, x: int, y: int) -> int:
        p = self.p
        return self.encode([(a + b) % p for a, b in zip(self.decode(x), self.decode(y))])

    def _neg_generic(self, x: int) -> int:
        p = self.p
        return self.encode([(-a) % p for a in self.decode(x)])

    def _mul_generic(self, x: int, y: int) -> int:
        return self.encode(_pmul_mod(self.decode(x), self.decode(y), self.modulus, self.p))

    def _inv_generic(self, x: int) -> int:
        # Fermat inverse through generic multiplication only: this runs while
        # the table lock is held, so it must not route back through mul().
        if x == 0:
            raise TridentError("division_by_zero", "inverse of zero field element")
        e = self.q - 2
        result, base = self.one, x
        while e:
            if e & 1:
                result = self._mul_generic(result, base)
            base = self._mul_generic(base, base)
            e >>= 1
        return result

    def add(self, x: int, y: int) -> int:
        if self.q <= _TABLE_Q_MAX:
            self._ensure_tables()
            return int(self.add_t[x, y])
        return self._add_generic(x, y)

    def neg(self, x: int) -> int:
        if self.q <= _TABLE_Q_MAX:
            self._ensure_tables()
            return int(self.neg_t[x])
        return self._neg_generic(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.q <= _TABLE_Q_MAX:
            self._ensure_tables()
            return int(self.mul_t[x, y])
        return self._mul_generic(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise TridentError("division_by_zero", "inverse of zero field element")
        if self.q <= _TABLE_Q_MAX:
            self._ensure_tables()
            return int(self.inv_t[x])
        return self._inv_generic(x)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow_el(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow_el(self.inv(x), -e)
        result = self.one
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, x: int) -> int:
        return self.pow_el(x, self.p)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def scalar(self, n: int) -> int:
        """Image of the rational integer n in F_q."""
        return n % self.p

    def is_square(self, x: int) -> bool:
        if self.p == 2 or x == 0:
            return True
        return self.pow_el(x, (self.q - 1) // 2) == self.one

    def first_nonsquare(self) -> int:
        assert self.p != 2
        for x in range(1, self.q):
            if not self.is_square(x):
                return x
        raise AssertionError("no nonsquare in F_q, q odd")

    def primitive_element(self) -> int:
        """First multiplicative generator in enumeration order."""
        fac = list(factorint(self.q - 1))
        for g in range(2, self.q):
            if g == 0:
                continue
            if all(self.pow_el(g, (self.q - 1) // ell) != self.one for ell in fac):
                return g
        raise AssertionError("no primitive element found")

    def element_degree(self, x: int) -> int:
        """Degree of F_p(x) over F_p (smallest d with x^(p^d) = x)."""
        y = x
        for d in range(1, self.r + 1):
            y = self.frobenius(y)
            if y == x:
                if self.r % d == 0:
                    return d
        raise AssertionError("frobenius orbit did not close")

    def subfield_elements(self, d: int) -> set[int]:
        """Elements of the subfield of size p^d (d | r)."""
        assert self.r % d == 0
        return {x for x in range(self.q) if self.element_degree(x) in _divs(d)}


@lru_cache(maxsize=None)
def _divs(n: int) -> frozenset[int]:
    return frozenset(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def fq_ctx(p: int, r: int) -> FqCtx:
    return FqCtx(p, r)


def find_root_in_ctx(poly_mod_p: list[int], ctx: FqCtx, scan_cap: int = 1 << 16):
    """First root (enumeration order) of a polynomial with F_p coefficients.

    Returns None when no root exists.  Guarded: scanning is for small fields.
    """
    if ctx.q > scan_cap:
        raise guard_exceeded("field size for root scan", ctx.q, scan_cap)
    coeffs = [c % ctx.p for c in poly_mod_p]
    for x in range(ctx.q):
        acc = 0
        for c in reversed(coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        if acc == 0:
            return x
    return None


def subfield_embedding(small: FqCtx, big: FqCtx):
    """The embedding F_(p^d) -> F_(p^m) sending the small generator to the
    first root of the small modulus in the big field (d | m required)."""
    assert small.p == big.p and big.r % small.r == 0
    if small.r == 1:
        return lambda x: x % big.p
    root = find_root_in_ctx(list(small.modulus), big)
    assert root is not None, "small modulus has no root in the big field"
    powers = [big.one]
    for _ in range(small.r - 1):
        powers.append(big.mul(powers[-1], root))

    def emb(x: int) -> int:
        acc = big.zero
        for c, w in zip(small.decode(x), powers):
            if c:
                acc = big.add(acc, big.mul(c % big.p, w))
        return acc

    return emb


# -- matrices -------------------------------------------------------------------

Mat = tuple[int, int, int, int]


def mat_mul(ctx: FqCtx, m1: Mat, m2: Mat) -> Mat:
    a, b, c, d = m1
    e, f, g, h = m2
    return (
        ctx.add(ctx.mul(a, e), ctx.mul(b, g)),
        ctx.add(ctx.mul(a, f), ctx.mul(b, h)),
        ctx.add(ctx.mul(c, e), ctx.mul(d, g)),
        ctx.add(ctx.mul(c, f), ctx.mul(d, h)),
    )


def mat_det(ctx: FqCtx, m: Mat) -> int:
    a, b, c, d = m
    return ctx.sub(ctx.mul(a, d), ctx.mul(b, c))


def mat_trace(ctx: FqCtx, m: Mat) -> int:
    return ctx.add(m[0], m[3])


def mat_neg(ctx: FqCtx, m: Mat) -> Mat:
    return tuple(ctx.neg(x) for x in m)  # type: ignore[return-value]


def mat_scale(ctx: FqCtx, s: int, m: Mat) -> Mat:
    return tuple(ctx.mul(s, x) for x in m)  # type: ignore[return-value]


def mat_inv(ctx: FqCtx, m: Mat) -> Mat:
    a, b, c, d = m
    det = mat_det(ctx, m)
    s = ctx.inv(det)
    return (
        ctx.mul(s, d),
        ctx.mul(s, ctx.neg(b)),
        ctx.mul(s, ctx.neg(c)),
        ctx.mul(s, a),
    )


def mat_identity(ctx: FqCtx) -> Mat:
    return (ctx.one, ctx.zero, ctx.zero, ctx.one)


def is_scalar(ctx: FqCtx, m: Mat) -> bool:
    return m[1] == ctx.zero and m[2] == ctx.zero and m[0] == m[3]


def canonical_psl2(ctx: FqCtx, m: Mat) -> Mat:
    """Canonical representative of {m, -m} (m with det 1)."""
    if ctx.p == 2:
        return m
    n = mat_neg(ctx, m)
    return min(m, n)


def canonical_pgl2(ctx: FqCtx, m: Mat) -> Mat:
    """Scale-canonical representative: det 1 for even q (where PGL2 = SL2),
    first nonzero entry 1 for odd q."""
    if ctx.p == 2:
        det = mat_det(ctx, m)
        # unique square root in characteristic 2
        s = ctx.pow_el(ctx.inv(det), ctx.q // 2)
        return mat_scale(ctx, s, m)
    first = m[0] if m[0] != ctx.zero else m[1]
    return mat_scale(ctx, ctx.inv(first), m)


def canonical(ctx: FqCtx, kind: str, m: Mat) -> Mat:
    return canonical_psl2(ctx, m) if kind == "PSL2" else canonical_pgl2(ctx, m)


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def pgl2_order(q: int) -> int:
    return q * (q * q - 1)


def group_order(kind: str, q: int) -> int:
    return psl2_order(q) if kind == "PSL2" else pgl2_order(q)


def group_label(kind: str, q: int) -> str:
    """Display tag; in even characteristic the two kinds coincide and the
    PGL2 name is the conventional one."""
    shown = "PGL2" if (kind == "PGL2" or q % 2 == 0) else "PSL2"
    return f"{shown}(F{q})"


def sl2_elements_raw(ctx: FqCtx):
    """All of SL2(F_q) as raw matrices, deterministic order."""
    q = ctx.q
    out = []
    for a in range(q):
        if a != 0:
            ia = ctx.inv(a)
            for b in range(q):
                for c in range(q):
                    d = ctx.mul(ia, ctx.add(ctx.one, ctx.mul(b, c)))
                    out.append((a, b, c, d))
        else:
            for b in range(1, q):
                c = ctx.neg(ctx.inv(b))
                for d in range(q):
                    out.append((a, b, c, d))
    return out


def _check_enumeration_guard(ctx: FqCtx) -> None:
    cap = max_q_guard()
    if ctx.q > cap:
        raise guard_exceeded("q for group enumeration", ctx.q, cap)


def psl2_elements(ctx: FqCtx) -> list[Mat]:
    _check_enumeration_guard(ctx)
    seen = {canonical_psl2(ctx, m) for m in sl2_elements_raw(ctx)}
    return sorted(seen)


def pgl2_elements(ctx: FqCtx) -> list[Mat]:
    _check_enumeration_guard(ctx)
    if ctx.p == 2:
        return psl2_elements(ctx)
    q = ctx.q
    out = []
    for b in range(q):
        for c in range(q):
            bc = ctx.mul(b, c)
            for d in range(q):
                if d != bc:
                    out.append((ctx.one, b, c, d))
    for c in range(1, q):
        for d in range(q):
            out.append((ctx.zero, ctx.one, c, d))
    assert len(out) == pgl2_order(q)
    return sorted(out)


def group_elements(ctx: FqCtx, kind: str) -> list[Mat]:
    return psl2_elements(ctx) if kind == "PSL2" else pgl2_elements(ctx)


def element_order(ctx: FqCtx, kind: str, m: Mat) -> int:
    """Projective order (order of the image in PSL2 resp. PGL2)."""
    acc = m
    n = 1
    while not is_scalar(ctx, acc):
        acc = mat_mul(ctx, acc, m)
        n += 1
        assert n <= ctx.q + 1, "order runaway"
    return n


# -- conjugacy classes ------------------------------------------------------------


@dataclass(frozen=True)
class ConjClassId:
    """Structural id of a conjugacy class (equal ids <=> conjugate)."""

    group: str  # "PSL2" | "PGL2"
    tag: str  # "identity" | "unipotent" | "split" | "nonsplit"
    datum: tuple  # PSL2: sorted (t, -t); PGL2: (theta,)
    uni_class: str | None  # odd-q PSL2 unipotent square class: "square"/"nonsquare"
    order: int


def _has_root_x2_tx_d(ctx: FqCtx, t: int, d: int) -> bool:
    """Does x^2 - t x + d have a root in F_q?"""
    if ctx.p != 2:
        disc = ctx.sub(ctx.mul(t, t), ctx.mul(ctx.scalar(4), d))
        return ctx.is_square(disc)
    for x in range(ctx.q):
        v = ctx.add(ctx.add(ctx.mul(x, x), ctx.mul(t, x)), d)
        if v == 0:
            return True
    return False


def _psl2_unipotent_square_class(ctx: FqCtx, m: Mat) -> str:
    """Square class separating the two odd-q unipotent PSL2 classes."""
    assert ctx.p != 2
    if mat_trace(ctx, m) != ctx.scalar(2):
        m = mat_neg(ctx, m)
    n21 = m[2]
    n12 = m[1]
    if n21 != ctx.zero:
        u = n21
    else:
        u = ctx.neg(n12)
    assert u != ctx.zero
    return "square" if ctx.is_square(u) else "nonsquare"


def conj_class_id(ctx: FqCtx, kind: str, m: Mat) -> ConjClassId:
    if kind == "PSL2":
        m = canonical_psl2(ctx, m)
        t = mat_trace(ctx, m)
        if is_scalar(ctx, m):
            return ConjClassId("PSL2", "identity", (), None, 1)
        two = ctx.scalar(2)
        if t == two or t == ctx.neg(two):
            uni = None if ctx.p == 2 else _psl2_unipotent_square_class(ctx, m)
            return ConjClassId("PSL2", "unipotent", (), uni, element_order(ctx, kind, m))
        datum = tuple(sorted((t, ctx.neg(t))))
        tag = "split" if _has_root_x2_tx_d(ctx, t, ctx.one) else "nonsplit"
        return ConjClassId("PSL2", tag, datum, None, element_order(ctx, kind, m))
    m = canonical_pgl2(ctx, m)
    if is_scalar(ctx, m):
        return ConjClassId("PGL2", "identity", (), None, 1)
    t = mat_trace(ctx, m)
    d = mat_det(ctx, m)
    theta = ctx.mul(ctx.mul(t, t), ctx.inv(d))
    if theta == ctx.scalar(4):
        return ConjClassId("PGL2", "unipotent", (), None, element_order(ctx, kind, m))
    tag = "split" if _has_root_x2_tx_d(ctx, t, d) else "nonsplit"
    return ConjClassId("PGL2", tag, (theta,), None, element_order(ctx, kind, m))


def class_census(ctx: FqCtx, kind: str) -> dict[ConjClassId, int]:
    """Counts of elements per conjugacy class, with structural verification
    of the class counts per tag."""
    counts: dict[ConjClassId, int] = {}
    for m in group_elements(ctx, kind):
        cid = conj_class_id(ctx, kind, m)
        counts[cid] = counts.get(cid, 0) + 1
    _verify_class_counts(ctx, kind, counts)
    return counts


def _verify_class_counts(ctx: FqCtx, kind: str, counts: dict[ConjClassId, int]) -> None:
    q = ctx.q
    by_tag: dict[str, int] = {}
    for cid in counts:
        by_tag[cid.tag] = by_tag.get(cid.tag, 0) + 1
    assert by_tag.get("identity") == 1
    total = sum(counts.values())
    assert total == group_order(kind, q)
    if kind == "PGL2" and ctx.p != 2:
        assert by_tag.get("unipotent") == 1
        assert by_tag.get("split") == (q - 1) // 2
        assert by_tag.get("nonsplit") == (q + 1) // 2
        assert sum(by_tag.values()) == q + 2
    elif ctx.p == 2:
        # PSL2 = PGL2 = SL2 in characteristic 2
        assert by_tag.get("unipotent") == 1
        assert by_tag.get("split", 0) == q // 2 - 1
        assert by_tag.get("nonsplit") == q // 2
        assert sum(by_tag.values()) == q + 1
    else:
        assert by_tag.get("unipotent") == 2
        assert sum(by_tag.values()) == (q + 5) // 2


# -- outer automorphisms -----------------------------------------------------------


def outer_reps(ctx: FqCtx, kind: str) -> list[tuple[int, bool]]:
    """Coset representatives of Out: (frobenius power i, diagonal twist?).

    Out(PSL2(F_q)) = <sigma> x <tau> for odd q (order 2r), <sigma> for even q;
    Out(PGL2(F_q)) = <sigma> (order r).
    """
    twists = [False]
    if kind == "PSL2" and ctx.p != 2:
        twists = [False, True]
    return [(i, tw) for i in range(ctx.r) for tw in twists]


def apply_auto(ctx: FqCtx, kind: str, rep: tuple[int, bool], m: Mat) -> Mat:
    i, tw = rep
    out = m
    if tw:
        nu = ctx.first_nonsquare()
        # conjugation by diag(nu, 1)
        a, b, c, d = out
        out = (a, ctx.mul(nu, b), ctx.mul(c, ctx.inv(nu)), d)
    for _ in range(i):
        out = tuple(ctx.frobenius(x) for x in out)  # type: ignore[assignment]
    return canonical(ctx, kind, out)


def pgl2_to_psl2_quadratic(ctx: FqCtx, m: Mat) -> tuple[FqCtx, Mat]:
    """Image of a PGL2(F_q) element under the embedding into PSL2(F_(q^2))
    (divide by a square root of the determinant, which exists there)."""
    big = fq_ctx(ctx.p, 2 * ctx.r)
    emb = subfield_embedding(ctx, big)
    mm = tuple(emb(x) for x in m)
    det = mat_det(big, mm)
    s = _sqrt_in_ctx(big, det)
    out = mat_scale(big, big.inv(s), mm)
    assert mat_det(big, out) == big.one
    return big, canonical_psl2(big, out)


def _sqrt_in_ctx(ctx: FqCtx, x: int) -> int:
    if ctx.p == 2:
        return ctx.pow_el(x, ctx.q // 2)
    assert ctx.is_square(x)
    if ctx.q % 4 == 3:
        return ctx.pow_el(x, (ctx.q + 1) // 4)
    for y in range(ctx.q):
        if ctx.mul(y, y) == x:
            return y
    raise AssertionError("square root not found")


# -- fields of rationality ----------------------------------------------------------


def class_rationality(ctx: FqCtx, cid: ConjClassId) -> tuple[AbelianField, AbelianField]:
    """(field of rationality, weak field of rationality) of the class.

    Semisimple classes of projective order m: (Q(lambda_m), its Frob_p-fixed
    subfield).  Unipotent classes: (Q(sqrt(p*)), Q) in PSL2 when pr is odd,
    (Q, Q) otherwise.  Identity: (Q, Q).
    """
    Q = AbelianField.rationals()
    if cid.tag == "identity":
        return (Q, Q)
    if cid.tag == "unipotent":
        if cid.group == "PSL2" and ctx.p != 2 and (ctx.p * ctx.r) % 2 == 1:
            return (sqrt_pstar_field(ctx.p), Q)
        return (Q, Q)
    K = field_of_lambda(cid.order)
    return (K, K.fixed_field_of_frobenius(ctx.p))


# -- multiplication tables and closures ----------------------------------------------


_GROUP_TABLE_ELEMS_MAX = 3000

_table_lock = threading.Lock()
_table_cache: dict[tuple[int, int, str], tuple[list[Mat], dict[Mat, int], np.ndarray]] = {}


def group_table(ctx: FqCtx, kind: str):
    """(elements, index, table) with table[i, j] = index of elements[i]*elements[j]."""
    key = (ctx.p, ctx.r, kind)
    with _table_lock:
        got = _table_cache.get(key)
    if got is not None:
        return got
    elems = group_elements(ctx, kind)
    n = len(elems)
    if n > _GROUP_TABLE_ELEMS_MAX:
        raise guard_exceeded("group order for multiplication table", n, _GROUP_TABLE_ELEMS_MAX)
    ctx._ensure_tables()
    assert ctx.q <= _TABLE_Q_MAX
    q = ctx.q
    A = np.array([m[0] for m in elems], dtype=np.int64)
    B = np.array([m[1] for m in elems], dtype=np.int64)
    C = np.array([m[2] for m in elems], dtype=np.int64)
    D = np.array([m[3] for m in elems], dtype=np.int64)
    add_t, mul_t, neg_t, inv_t = ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t
    keys = (((A * q + B) * q + C) * q) + D
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    # elems is sorted already, so keys must be increasing
    assert (order == np.arange(n)).all()

    def enc(Ae, Be, Ce, De):
        return ((Ae * q + Be) * q + Ce) * q + De

    table = np.empty((n, n), dtype=np.int32)
    for i, (a, b, c, d) in enumerate(elems):
        E = add_t[mul_t[a, A], mul_t[b, C]]
        F = add_t[mul_t[a, B], mul_t[b, D]]
        G = add_t[mul_t[c, A], mul_t[d, C]]
        H = add_t[mul_t[c, B], mul_t[d, D]]
        if kind == "PSL2" or ctx.p == 2:
            if ctx.p == 2:
                ks = enc(E, F, G, H)
            else:
                k1 = enc(E, F, G, H)
                k2 = enc(neg_t[E], neg_t[F], neg_t[G], neg_t[H])
                ks = np.minimum(k1, k2)
        else:
            first = np.where(E != 0, E, F)
            s = inv_t[first]
            ks = enc(mul_t[s, E], mul_t[s, F], mul_t[s, G], mul_t[s, H])
        idx = np.searchsorted(sorted_keys, ks)
        assert (sorted_keys[idx] == ks).all()
        table[i] = idx
    result = (elems, {m: i for i, m in enumerate(elems)}, table)
    with _table_lock:
        _table_cache[key] = result
    return result


def closure(table: np.ndarray, gens: list[int], identity: int) -> np.ndarray:
    """Indices of the subgroup generated by gens (BFS over the table)."""
    n = table.shape[0]
    member = np.zeros(n, dtype=bool)
    member[identity] = True
    frontier = []
    for g in gens:
        if not member[g]:
            member[g] = True
            frontier.append(g)
    gens_arr = np.array(sorted(set(gens)), dtype=np.int64)
    while frontier:
        fr = np.array(frontier, dtype=np.int64)
        prod = table[fr[:, None], gens_arr[None, :]].ravel()
        new = np.unique(prod)
        fresh = new[~member[new]]
        member[fresh] = True
        frontier = fresh.tolist()
    return np.nonzero(member)[0]


def identity_index(ctx: FqCtx, kind: str) -> int:
    elems, index, _ = group_table(ctx, kind)
    return index[canonical(ctx, kind, mat_identity(ctx))]
