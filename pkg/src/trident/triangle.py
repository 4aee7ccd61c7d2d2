"""Triangle triples (a, b, c): curvature class, maximality, abelianized
triangle group, the beta invariant, genus bookkeeping, and prime
admissibility.

Entries are integers >= 2 or the infinite marker INF (math.inf), with the
conventions 1/inf = 0 and lambda_inf = lambda_(2*inf) = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from sympy import ZZ, Matrix, isprime
from sympy.matrices.normalforms import smith_normal_form

from .cyclotomic import INF, CycElement, lam, lam2
from .errors import TridentError, inconsistent_ramification, non_hyperbolic

Entry = int | float  # int >= 2, or INF
Triple = tuple[Entry, Entry, Entry]


def validate_triple(t) -> Triple:
    if len(t) != 3:
        raise TridentError("invalid_triple", f"need three entries, got {t!r}")
    out = []
    for s in t:
        if s == INF:
            out.append(INF)
            continue
        s = int(s)
        if s < 2:
            raise TridentError(
                "invalid_triple", f"entries must be >= 2 or inf, got {s}", entry=s
            )
        out.append(s)
    return tuple(out)


def chi(t) -> Fraction:
    """Euler characteristic-style curvature 1/a + 1/b + 1/c - 1."""
    t = validate_triple(t)
    total = Fraction(-1)
    for s in t:
        if s != INF:
            total += Fraction(1, int(s))
    return total


def classify_triple(t) -> str:
    x = chi(t)
    if x < 0:
        return "hyperbolic"
    return "euclidean" if x == 0 else "spherical"


def is_hyperbolic(t) -> bool:
    return chi(t) < 0


def _require_hyperbolic(t) -> Triple:
    t = validate_triple(t)
    cls = classify_triple(t)
    if cls != "hyperbolic":
        raise non_hyperbolic(t, cls)
    return t


def _double(s):
    return INF if s == INF else 2 * s


def is_maximal(t) -> bool:
    """No inclusion of the triangle group into a strictly larger one.

    The non-maximal shapes are (a, a, c), (a, b, b), (2, b, 2b), (3, b, 3b)
    up to permutation.
    """
    t = _require_hyperbolic(t)
    for x, y, z in permutations(t):
        if x == y:
            return False
        if x == 2 and z == _double(y):
            return False
        if x == 3 and y != INF and z == 3 * y:
            return False
    return True


def abelianization(t) -> tuple[int, ...]:
    """Invariant factors of the abelianized triangle group.

    Factors of 1 are dropped; each free Z summand appears as 0.
    """
    t = validate_triple(t)
    a, b, c = t
    rows = []
    if a != INF:
        rows.append([int(a), 0])
    if b != INF:
        rows.append([0, int(b)])
    if c != INF:
        rows.append([int(c), int(c)])
    if not rows:
        return (0, 0)
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    free = 2 - sum(1 for d in diag if d != 0)
    factors = sorted(d for d in diag if d not in (0, 1))
    return tuple(factors) + (0,) * free


def is_perfect(t) -> bool:
    return abelianization(t) == ()


def beta(t) -> CycElement:
    """beta = lambda_2a^2 + lambda_2b^2 + lambda_2c^2
             + lambda_2a*lambda_2b*lambda_2c - 4,
    computed both directly and via lambda_a + lambda_b + lambda_c
    + lambda_2a*lambda_2b*lambda_2c + 2 (the half-angle identity), with the
    two forms asserted equal."""
    t = _require_hyperbolic(t)
    a, b, c = t
    l2 = [lam2(s) for s in t]
    prod = l2[0] * l2[1] * l2[2]
    form1 = l2[0] * l2[0] + l2[1] * l2[1] + l2[2] * l2[2] + prod - 4
    form2 = lam(a) + lam(b) + lam(c) + prod + 2
    n = math.lcm(form1.conductor, form2.conductor)
    f1, f2 = form1.embed(n), form2.embed(n)
    assert f1.coeffs == f2.coeffs, "beta forms disagree"
    return f1


def genus_from_order(t, order: int) -> int:
    """Genus of a curve with automorphism group of the given order branched
    over three points with ramification orders (a, b, c)."""
    t = validate_triple(t)
    g = 1 - Fraction(order) * chi(t) / 2
    if g.denominator != 1 or g < 0:
        raise inconsistent_ramification(t, order)
    return int(g)


def is_special_shape(t) -> bool:
    """Is {a, b, c} = {mk, m(k+1), mk(k+1)} for some m, k >= 1?"""
    t = validate_triple(t)
    if any(s == INF for s in t):
        return False
    target = sorted(int(s) for s in t)
    top = target[-1]
    for m in range(1, top + 1):
        for k in range(1, top + 1):
            shape = sorted((m * k, m * (k + 1), m * k * (k + 1)))
            if shape[0] > top:
                break
            if shape == target:
                return True
    return False


@dataclass(frozen=True)
class Admissibility:
    """Verdict for a rational prime p against a triple."""

    status: str  # "admissible" | "admissible_at_2" | "inadmissible"
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != "inadmissible"


def admissible_prime(t, p: int) -> Admissibility:
    """Admissibility of p: primes away from 2abc are admissible; p = 2 is
    admissible when a, b, c are all odd and the triple is not of the special
    multiplicative shape."""
    t = validate_triple(t)
    if not isprime(p):
        raise TridentError("invalid_prime", f"p must be prime, got {p}", p=p)
    finite = [int(s) for s in t if s != INF]
    if any(s % p == 0 for s in finite):
        return Admissibility("inadmissible", "divides_orders")
    if p == 2:
        if is_special_shape(t):
            return Admissibility("inadmissible", "special_shape_at_2")
        return Admissibility("admissible_at_2")
    return Admissibility("admissible")
