"""Abelian number fields as fixed fields inside cyclotomic fields.

A field is a pair (conductor n, fixing subgroup H <= (Z/nZ)*): the subfield of
Q(zeta_n) fixed by the sigma_k with k in H.  The conductor is always minimal
(no smaller cyclotomic field contains the same fixed field), which makes the
representation canonical and makes equality, containment and compositum plain
subgroup computations.

The triangle-group field tower lives here.  For a triple t = (a, b, c) with
2s-indexed half-traces lambda_(2s):

    F(t) = Q(lambda_(2a), lambda_(2b), lambda_(2c))
    D(t) = Q(lambda_a, lambda_b, lambda_c)
    E(t) = Q(lambda_a, lambda_b, lambda_c, lambda_(2a)*lambda_(2b)*lambda_(2c))

all computed as fixed fields at the ambient conductor N = lcm(2a, 2b, 2c)
using the stabilizer rule: sigma_k fixes lambda_m iff k = +-1 mod m.  When k
fixes lambda_s, it multiplies lambda_(2s) by a sign eps_s(k) = +1 iff
k = +-1 mod 2s, which is what the E(t) computation tracks.  Infinite entries
contribute rational lambdas and are transparent here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime, jacobi_symbol, primefactors

from .cyclotomic import INF, phi
from .errors import TridentError, infinite_order, non_hyperbolic, ramified_prime


@lru_cache(maxsize=None)
def _units_cached(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    return tuple(k for k in range(1, n) if math.gcd(k, n) == 1)


def _close_subgroup(n: int, gens: set[int]) -> frozenset[int]:
    """Subgroup of (Z/nZ)* generated by gens (finite, so products suffice)."""
    if n == 1:
        return frozenset({1})
    gens = {g % n for g in gens} | {1}
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        for h in gens:
            x = (g * h) % n
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return frozenset(seen)


@dataclass(frozen=True)
class AbelianField:
    """Fixed field of H <= (Z/nZ)* acting on Q(zeta_n); n minimal."""

    conductor: int
    fixing_group: tuple[int, ...]

    # -- construction --------------------------------------------------------

    @staticmethod
    def rationals() -> "AbelianField":
        return AbelianField(1, (1,))

    @staticmethod
    def from_fixing(n: int, subgroup) -> "AbelianField":
        """Canonical field from a fixing set at conductor n (minimized)."""
        if n == 1:
            return AbelianField(1, (1,))
        sub = frozenset(k % n for k in subgroup)
        assert 1 in sub
        for k in sub:
            assert math.gcd(k, n) == 1
        closed = _close_subgroup(n, set(sub))
        assert closed == sub, "fixing set is not a subgroup"
        return AbelianField._minimize(n, sub)

    @staticmethod
    def _minimize(n: int, sub: frozenset[int]) -> "AbelianField":
        """Smallest conductor m | n whose restriction kernel lies in sub.

        Conductors m = 2 mod 4 are skipped: Q(zeta_m) = Q(zeta_(m/2)) there,
        so the canonical conductor is never 2 mod 4 (nor 2 itself).
        """
        if len(sub) == len(_units_cached(n)):
            return AbelianField(1, (1,))
        best = None
        for m in sorted(_divisors(n)):
            if m == 1 or (m % 4 == 2):
                continue
            kernel = frozenset(k for k in _units_cached(n) if k % m == 1)
            if kernel <= sub:
                best = m
                break
        assert best is not None  # m = n always works
        reduced = frozenset(k % best for k in sub)
        return AbelianField(best, tuple(sorted(reduced)))

    # -- invariants -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return phi(self.conductor) // len(self.fixing_group)

    def is_rationals(self) -> bool:
        return self.degree == 1

    def _sub(self) -> frozenset[int]:
        return frozenset(self.fixing_group)

    # -- lattice operations ---------------------------------------------------

    def _lift(self, n: int) -> frozenset[int]:
        """Preimage of the fixing group under (Z/nZ)* -> (Z/mZ)*."""
        m = self.conductor
        assert n % m == 0
        sub = self._sub()
        return frozenset(k for k in _units_cached(n) if (k % m if m > 1 else 1) in sub)

    def contains(self, other: "AbelianField") -> bool:
        """self >= other as fields."""
        n = math.lcm(self.conductor, other.conductor)
        return self._lift(n) <= other._lift(n)

    def compositum(self, other: "AbelianField") -> "AbelianField":
        n = math.lcm(self.conductor, other.conductor)
        return AbelianField._minimize(n, self._lift(n) & other._lift(n))

    # -- Frobenius ------------------------------------------------------------

    def frobenius_order(self, p: int) -> int:
        """Order of Frob_p in Gal(K/Q) = (Z/nZ)*/H; error if p ramifies."""
        n = self.conductor
        if n > 1 and n % p == 0:
            raise ramified_prime(p, n)
        if n == 1:
            return 1
        sub = self._sub()
        x = p % n
        r = 1
        acc = x
        while acc not in sub:
            acc = (acc * x) % n
            r += 1
        return r

    def fixed_field_of_frobenius(self, p: int) -> "AbelianField":
        """Subfield fixed by Frob_p (the residue field of p, inertia trivial)."""
        n = self.conductor
        if n > 1 and n % p == 0:
            raise ramified_prime(p, n)
        if n == 1:
            return self
        sub = _close_subgroup(n, set(self._sub()) | {p % n})
        return AbelianField._minimize(n, sub)

    def splits_completely(self, p: int) -> bool:
        return self.frobenius_order(p) == 1

    # -- presentation ----------------------------------------------------------

    def pretty(self) -> str:
        return _pretty(self)

    def to_json_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "fixing_group": sorted(self.fixing_group),
            "degree": self.degree,
            "pretty": self.pretty(),
        }


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    from sympy import divisors as _sympy_divisors

    return tuple(int(d) for d in _sympy_divisors(n))


# -- named fields ---------------------------------------------------------------


def field_of_lambda(s) -> AbelianField:
    """Q(lambda_s), the maximal real subfield data for index s."""
    if s == INF:
        return AbelianField.rationals()
    s = int(s)
    if s <= 2:
        return AbelianField.rationals()
    sub = frozenset(k for k in _units_cached(s) if k % s in (1 % s, (s - 1) % s))
    return AbelianField._minimize(s, sub)


def field_generated_by(gens) -> AbelianField:
    """Field generated by the given cyclotomic elements ([] -> Q).

    The fixing group is the generic stabilizer { k in (Z/NZ)* :
    sigma_k(g) = g for every generator }, N the lcm of the conductors.
    """
    n = 1
    elems = []
    for g in gens:
        elems.append(g)
        n = math.lcm(n, g.conductor)
    if n == 1:
        return AbelianField.rationals()
    embedded = [g.embed(n) for g in elems]
    sub = frozenset(
        k
        for k in _units_cached(n)
        if all(g.galois_apply(k).coeffs == g.coeffs for g in embedded)
    )
    return AbelianField._minimize(n, sub)


def lambda_field_compositum(indices) -> AbelianField:
    """Compositum of Q(lambda_s) over the given indices ([] -> Q)."""
    out = AbelianField.rationals()
    for s in indices:
        out = out.compositum(field_of_lambda(s))
    return out


def sqrt_pstar_field(p: int) -> AbelianField:
    """Q(sqrt(p*)) with p* = (-1)^((p-1)/2) p, the quadratic field inside
    Q(zeta_p); p must be an odd prime."""
    if p == 2 or not isprime(p):
        raise TridentError(
            "invalid_prime",
            f"sqrt(p*) field needs an odd prime, got {p}",
            p=p,
        )
    squares = frozenset(pow(x, 2, p) for x in range(1, p))
    return AbelianField._minimize(p, squares)


def adjoin_sqrt_pstar(field: AbelianField, p: int) -> AbelianField:
    return field.compositum(sqrt_pstar_field(p))


# -- the triangle tower -----------------------------------------------------------


def _check_hyperbolic(t) -> None:
    total = Fraction(0)
    for s in t:
        if s == INF:
            continue
        s = int(s)
        if s < 2:
            raise TridentError(
                "invalid_triple", f"triple entries must be >= 2 (or inf): {t}", entry=s
            )
        total += Fraction(1, s)
    if total >= 1:
        cls = "spherical" if total > 1 else "euclidean"
        raise non_hyperbolic(t, cls)


def _ambient(t) -> int:
    n = 1
    for s in t:
        if s != INF:
            n = math.lcm(n, 2 * int(s))
    return n


def _fixes_lambda(k: int, n: int, m: int) -> bool:
    """Does sigma_k at conductor n fix lambda_m (m | n assumed)?"""
    if m <= 2:
        return True
    r = k % m
    return r == 1 or r == m - 1


def F_field(t) -> AbelianField:
    """Q of all lambda_(2s): the trace field of the ambient triangle group."""
    _check_hyperbolic(t)
    n = _ambient(t)
    fin = [int(s) for s in t if s != INF]
    sub = frozenset(
        k for k in _units_cached(n) if all(_fixes_lambda(k, n, 2 * s) for s in fin)
    )
    return AbelianField._minimize(n, sub)


def D_field(t) -> AbelianField:
    """Q of all lambda_s."""
    _check_hyperbolic(t)
    n = _ambient(t)
    fin = [int(s) for s in t if s != INF]
    sub = frozenset(
        k for k in _units_cached(n) if all(_fixes_lambda(k, n, s) for s in fin)
    )
    return AbelianField._minimize(n, sub)


def E_field(t) -> AbelianField:
    """Q of the lambda_s together with the product of the lambda_(2s).

    On the subgroup fixing every lambda_s, each sigma_k scales lambda_(2s) by
    eps_s(k) = +-1 (+1 iff k = +-1 mod 2s), so the product is fixed iff it is
    zero (some s = 2) or the signs multiply to +1.
    """
    _check_hyperbolic(t)
    n = _ambient(t)
    fin = [int(s) for s in t if s != INF]
    product_zero = any(s == 2 for s in fin)

    def fixes(k: int) -> bool:
        if not all(_fixes_lambda(k, n, s) for s in fin):
            return False
        if product_zero:
            return True
        sign = 1
        for s in fin:
            if not _fixes_lambda(k, n, 2 * s):
                sign = -sign
        return sign == 1

    sub = frozenset(k for k in _units_cached(n) if fixes(k))
    return AbelianField._minimize(n, sub)


def splits_completely_in_F_over_E(t, p: int) -> bool:
    """p splits completely in F(t) over E(t): same Frobenius order in both."""
    return F_field(t).frobenius_order(p) == E_field(t).frobenius_order(p)


def D_pprime(t, p: int) -> AbelianField:
    """Q of lambda_s over the entries s coprime to p (prime-to-p part of D)."""
    out = AbelianField.rationals()
    for s in t:
        if s == INF:
            raise infinite_order("D_pprime")
        if int(s) % p:
            out = out.compositum(field_of_lambda(int(s)))
    return out


def F_pprime(t, p: int) -> AbelianField:
    """Q of lambda_(2s) over the entries s coprime to p."""
    out = AbelianField.rationals()
    for s in t:
        if s == INF:
            raise infinite_order("F_pprime")
        if int(s) % p:
            out = out.compositum(field_of_lambda(2 * int(s)))
    return out


# -- pretty printing ----------------------------------------------------------------


def _fundamental_discriminant(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


def _chi_d(d: int, k: int) -> int:
    """Quadratic character of Q(sqrt(d)) at k (k coprime to the discriminant)."""
    disc = _fundamental_discriminant(d)
    if k == 1:
        return 1
    if k % 2:
        return int(jacobi_symbol(disc % k, k))
    return _chi_even(disc, k)


def _chi_even(disc: int, k: int) -> int:
    # k even can only be coprime to an odd discriminant (d = 1 mod 4)
    assert disc % 2
    sign = 1
    while k % 2 == 0:
        k //= 2
        r = disc % 8
        sign *= 1 if r in (1, 7) else -1
    if k > 1:
        sign *= int(jacobi_symbol(disc % k, k))
    return sign


def contains_sqrt(field: AbelianField, d: int) -> bool:
    """Is sqrt(d) (d squarefree, != 0, 1) in the field?"""
    disc = _fundamental_discriminant(d)
    n = field.conductor
    if n % abs(disc):
        return False
    return all(_chi_d(d, k % abs(disc)) == 1 for k in field.fixing_group)


def _squarefree_candidates(n: int) -> list[int]:
    """Squarefree d with Q(sqrt(d)) possibly inside Q(zeta_n), by |d| then sign."""
    odd = [int(q) for q in primefactors(n) if q != 2]
    mults = [1]
    for q in odd:
        mults = mults + [m * q for m in mults]
    ds = set()
    for m in mults:
        for d in (m, -m, 2 * m, -2 * m):
            if d in (0, 1):
                continue
            if n % abs(_fundamental_discriminant(d)) == 0:
                ds.add(d)
    return sorted(ds, key=lambda d: (abs(d), d < 0))


def _sqrt_basis(field: AbelianField) -> list[int]:
    """Greedy squarefree generators whose sqrt's generate the field."""
    gens: list[int] = []
    span = AbelianField.rationals()
    for d in _squarefree_candidates(field.conductor):
        if span.degree == field.degree:
            break
        if not contains_sqrt(field, d):
            continue
        quad = _quadratic_field(d)
        new_span = span.compositum(quad)
        if new_span.degree > span.degree:
            gens.append(d)
            span = new_span
    assert span == field, "multiquadratic rendering failed"
    return gens


def _quadratic_field(d: int) -> AbelianField:
    disc = _fundamental_discriminant(d)
    n = abs(disc)
    sub = frozenset(k for k in _units_cached(n) if _chi_d(d, k) == 1)
    return AbelianField._minimize(n, sub)


def _lambda_name(field: AbelianField) -> str | None:
    """Render as Q(lambda_s) if the field is exactly one; smallest such s.

    Only s in {n, 2n} (n the canonical conductor) can match, since
    Q(lambda_s) has conductor s or s/2.
    """
    n = field.conductor
    for s in (n, 2 * n):
        if s >= 3 and field_of_lambda(s) == field:
            return f"Q(lambda_{s})"
    return None


def _pretty(field: AbelianField) -> str:
    if field.degree == 1:
        return "Q"
    n = field.conductor
    units = _units_cached(n)
    sub = field._sub()
    # exponent of the Galois group (Z/n)*/H
    exponent = 1
    for k in units:
        r = 1
        acc = k
        while acc not in sub:
            acc = (acc * k) % n
            r += 1
        exponent = math.lcm(exponent, r)
    if exponent <= 2:
        gens = _sqrt_basis(field)
        inner = ",".join(f"sqrt({d})" for d in gens)
        return f"Q({inner})"
    name = _lambda_name(field)
    if name:
        return name
    # compositum of a real-lambda part and quadratics
    best: tuple[int, int] | None = None  # (degree, s)
    for s in sorted(_divisors(2 * n)):
        if s < 3:
            continue
        lf = field_of_lambda(s)
        if lf.degree >= 3 and field.contains(lf):
            if best is None or lf.degree > best[0]:
                best = (lf.degree, s)
    if best is not None:
        s = best[1]
        span = field_of_lambda(s)
        parts = [f"lambda_{s}"]
        for d in _squarefree_candidates(n):
            if span.degree == field.degree:
                break
            if not contains_sqrt(field, d):
                continue
            new_span = span.compositum(_quadratic_field(d))
            if new_span.degree > span.degree:
                parts.append(f"sqrt({d})")
                span = new_span
        if span == field:
            return "Q(" + ",".join(parts) + ")"
    return f"Q[cond={n};deg={field.degree}]"
