"""Exact arithmetic in cyclotomic fields.

An element of Q(zeta_n) is stored as the vector of its phi(n) rational
coefficients on the power basis 1, zeta, ..., zeta^(phi(n)-1) modulo the n-th
cyclotomic polynomial Phi_n.  The conductor n is carried with the element;
binary operations embed both operands into the field of the lcm conductor.

The real subfield generators lambda_s = zeta_s + 1/zeta_s are the workhorse
elements.  Conventions for the degenerate index: lambda_inf = 2 and
lambda_(2*inf) = 2 (the infinite entry behaves like an order whose rotation is
parabolic, with 1/inf = 0).

Reduction of powers zeta^e for e >= phi(n) is the hot path.  Since Phi_n
divides x^n - 1 we first fold e mod n, so reduction rows are only ever needed
for exponents in [phi(n), n-1].  Rows are produced by an incremental rolling
sweep (multiply by x, reduce the top coefficient) in int64 numpy arrays, with
periodic checkpoints so later queries replay at most a short stretch.  Row
entries stay bounded (the companion matrix of Phi_n is diagonalizable with
eigenvalues on the unit circle); overflow guards assert this.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np
from sympy import factorint, totient

from .errors import TridentError, division_by_zero, incompatible_conductors

INF = math.inf

_INT64_GUARD = 1 << 62

_phi_lock = threading.RLock()
_phi_cache: dict[int, tuple[int, ...]] = {}


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler totient, cached (taken from sympy)."""
    return int(totient(n))


def _mul_binomial(poly: np.ndarray, e: int) -> np.ndarray:
    """poly * (x^e - 1), ascending int64 coefficients."""
    out = np.zeros(len(poly) + e, dtype=np.int64)
    out[e:] = poly
    out[: len(poly)] -= poly
    return out


def _div_binomial(poly: np.ndarray, e: int) -> np.ndarray:
    """Exact poly / (x^e - 1): the recurrence q[i] = q[i-e] - poly[i] is a
    cumulative sum along each residue class mod e."""
    q = -poly[: len(poly) - e]
    for r in range(min(e, len(q))):
        np.cumsum(q[r::e], out=q[r::e])
    assert int(np.abs(q).max(initial=0)) < _INT64_GUARD >> 1
    # zero remainder: the top e coefficients of poly must equal q shifted by e
    tail = np.zeros(e, dtype=np.int64)
    lo = len(q) - e
    tail[max(lo, 0) - lo :] = q[max(lo, 0) :]
    assert (poly[len(q) :] == tail).all(), "non-exact cyclotomic division"
    return q


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, length phi(n)+1.

    For the squarefree radical m the Moebius product
    prod_{d|m} (x^(m/d) - 1)^mu(d) is evaluated as binomial multiplications
    followed by exact binomial divisions (every intermediate quotient is a
    polynomial), then Phi_n(x) = Phi_m(x^(n/m)) spreads the exponents."""
    if n < 1:
        raise TridentError("invalid_conductor", f"conductor must be >= 1, got {n}", n=n)
    with _phi_lock:
        got = _phi_cache.get(n)
        if got is not None:
            return got
        if n == 1:
            result: tuple[int, ...] = (-1, 1)
        else:
            primes = sorted(factorint(n))
            m = math.prod(primes)
            mul_e: list[int] = []
            div_e: list[int] = []
            for k in range(len(primes) + 1):
                for sub in combinations(primes, k):
                    (mul_e if k % 2 == 0 else div_e).append(m // math.prod(sub))
            poly = np.ones(1, dtype=np.int64)
            for e in mul_e:
                poly = _mul_binomial(poly, e)
            for e in div_e:
                poly = _div_binomial(poly, e)
            step = n // m
            if step == 1:
                out = poly
            else:
                out = np.zeros((len(poly) - 1) * step + 1, dtype=np.int64)
                out[::step] = poly
            assert len(out) == phi(n) + 1 and out[-1] == 1
            result = tuple(int(c) for c in out)
        _phi_cache[n] = result
        return result


class _ReductionRows:
    """Rows x^e mod Phi_n for e in [phi(n), n-1], computed by a rolling sweep
    with periodic checkpoints so queries replay at most a short stretch."""

    CHECKPOINT = 1024

    def __init__(self, n: int):
        self.n = n
        self.deg = phi(n)
        poly = np.array(cyclotomic_polynomial(n), dtype=np.int64)
        self.tail = -poly[: self.deg]
        self.tail_bound = int(np.abs(self.tail).max(initial=0)) + 1
        self.checkpoints: dict[int, np.ndarray] = {self.deg: self.tail.copy()}

    def rows_for(self, exponents: list[int]) -> dict[int, np.ndarray]:
        """Rows for the given exponents (each in [deg, n-1]), sweep shared."""
        want = sorted(set(exponents))
        out: dict[int, np.ndarray] = {}
        if not want:
            return out
        ck = self.CHECKPOINT
        start = max(e for e in self.checkpoints if e <= want[0])
        row = self.checkpoints[start].copy()
        pos = start
        idx = 0
        while idx < len(want):
            target = want[idx]
            while pos < target:
                top = row[-1]
                row[1:] = row[:-1]
                row[0] = 0
                if top:
                    row += top * self.tail
                pos += 1
                if not (pos & 0x3F):
                    peak = int(np.abs(row).max(initial=0))
                    assert peak * self.tail_bound < _INT64_GUARD, (
                        "overflow in reduction sweep"
                    )
                if not (pos % ck) and pos not in self.checkpoints:
                    self.checkpoints[pos] = row.copy()
            out[target] = row.copy()
            idx += 1
        return out


_rows_lock = threading.RLock()
_rows_cache: dict[int, _ReductionRows] = {}


def _rows(n: int) -> _ReductionRows:
    with _rows_lock:
        got = _rows_cache.get(n)
        if got is None:
            got = _rows_cache[n] = _ReductionRows(n)
        return got


def _reduce_sparse(n: int, terms: dict[int, int]) -> list[int]:
    """Reduce an integer combination {e: c} of powers zeta^e mod Phi_n.

    Returns the length-phi(n) integer coefficient vector (Python ints, exact).
    """
    deg = phi(n)
    base = [0] * deg
    overflow: dict[int, int] = {}
    for e, c in terms.items():
        if not c:
            continue
        e %= n
        if e < deg:
            base[e] += c
        else:
            overflow[e] = overflow.get(e, 0) + c
    if overflow:
        rows = _rows(n).rows_for(list(overflow))
        acc = np.zeros(deg, dtype=np.int64)
        acc_obj = None
        budget = 0
        for e, c in overflow.items():
            if not c:
                continue
            row = rows[e]
            if acc_obj is None:
                budget += abs(c) * (int(np.abs(row).max(initial=0)) + 1)
                if abs(c) < (1 << 40) and budget < _INT64_GUARD:
                    acc += c * row
                    continue
                acc_obj = acc.astype(object)
            acc_obj += c * row.astype(object)
        vec = acc if acc_obj is None else acc_obj
        for i in range(deg):
            v = int(vec[i])
            if v:
                base[i] += v
    return base


def _coerce_coeffs(vals) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in vals)


@dataclass(frozen=True)
class CycElement:
    """Element of Q(zeta_conductor) on the power basis (exact rationals)."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.coeffs) == phi(self.conductor)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(value, conductor: int = 1) -> "CycElement":
        vec = [Fraction(0)] * phi(conductor)
        vec[0] = Fraction(value)
        return CycElement(conductor, tuple(vec))

    @staticmethod
    def from_sparse(conductor: int, terms: dict[int, Fraction]) -> "CycElement":
        """Element sum_e c_e * zeta^e, exponents arbitrary (folded mod n)."""
        den = math.lcm(*(Fraction(c).denominator for c in terms.values())) if terms else 1
        int_terms = {e: int(Fraction(c) * den) for e, c in terms.items()}
        vec = _reduce_sparse(conductor, int_terms)
        return CycElement(conductor, tuple(Fraction(v, den) for v in vec))

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise TridentError(
                "not_rational",
                "element is not rational",
                conductor=self.conductor,
            )
        return self.coeffs[0]

    def embed(self, conductor: int) -> "CycElement":
        """Image under Q(zeta_n) -> Q(zeta_m), requires n | m."""
        n, m = self.conductor, conductor
        if m % n:
            raise incompatible_conductors(n, m)
        if m == n:
            return self
        step = m // n
        terms = {i * step: c for i, c in enumerate(self.coeffs) if c}
        return CycElement.from_sparse(m, terms)

    def _pair(self, other) -> tuple["CycElement", "CycElement"]:
        if not isinstance(other, CycElement):
            other = CycElement.rational(other)
        n = math.lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "CycElement":
        a, b = self._pair(other)
        return CycElement(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __radd__(self, other) -> "CycElement":
        return self.__add__(other)

    def __neg__(self) -> "CycElement":
        return CycElement(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "CycElement":
        a, b = self._pair(other)
        return CycElement(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other) -> "CycElement":
        return (-self).__add__(other)

    def __mul__(self, other) -> "CycElement":
        if isinstance(other, (int, Fraction)):
            return CycElement(self.conductor, tuple(c * other for c in self.coeffs))
        a, b = self._pair(other)
        n = a.conductor
        da = math.lcm(*(c.denominator for c in a.coeffs))
        db = math.lcm(*(c.denominator for c in b.coeffs))
        an = [int(c * da) for c in a.coeffs]
        bn = [int(c * db) for c in b.coeffs]
        peak = max(map(abs, an), default=0) * max(map(abs, bn), default=0)
        if peak and peak * min(len(an), len(bn)) < _INT64_GUARD:
            conv = np.convolve(
                np.array(an, dtype=np.int64), np.array(bn, dtype=np.int64)
            )
            prod = {e: int(c) for e, c in enumerate(conv) if c}
        else:
            prod = {}
            for i, ci in enumerate(an):
                if ci:
                    for j, cj in enumerate(bn):
                        if cj:
                            prod[i + j] = prod.get(i + j, 0) + ci * cj
        vec = _reduce_sparse(n, prod)
        den = da * db
        return CycElement(n, tuple(Fraction(v, den) for v in vec))

    def __rmul__(self, other) -> "CycElement":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "CycElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycElement.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> "CycElement":
        """Multiplicative inverse via extended gcd in Q[x] modulo Phi_n."""
        if self.is_zero():
            raise division_by_zero()
        if self.is_rational():
            return CycElement.rational(1 / self.coeffs[0], self.conductor)
        n = self.conductor
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        a = list(self.coeffs)
        # extended Euclid: find u with u*a == gcd (a unit) mod Phi_n
        r0, r1 = mod, _poly_trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _poly_degree(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if _poly_degree(r1) < 0:
            raise TridentError(
                "not_invertible", "element is a zero divisor", conductor=n
            )
        c = r1[0]
        inv_vec = [x / c for x in s1]
        terms = {i: v for i, v in enumerate(inv_vec) if v}
        return CycElement.from_sparse(n, {e: Fraction(v) for e, v in terms.items()})

    def __truediv__(self, other) -> "CycElement":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise division_by_zero()
            return CycElement(self.conductor, tuple(c / other for c in self.coeffs))
        a, b = self._pair(other)
        return a * b.inverse()

    # -- Galois action -----------------------------------------------------

    def galois_apply(self, k: int) -> "CycElement":
        """sigma_k: zeta_n -> zeta_n^k, requires gcd(k, n) = 1."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise TridentError(
                "invalid_galois_index",
                f"galois index {k} not coprime to conductor {n}",
                k=k,
                conductor=n,
            )
        if n == 1 or k % n == 1:
            return self
        terms = {(i * k) % n: c for i, c in enumerate(self.coeffs) if c}
        return CycElement.from_sparse(n, terms)

    def galois_orbit(self) -> list["CycElement"]:
        """Distinct images under Gal(Q(zeta_n)/Q), deterministic order."""
        n = self.conductor
        seen: dict[tuple[Fraction, ...], CycElement] = {}
        for k in range(1, max(n, 2)):
            if math.gcd(k, n) != 1:
                continue
            img = self.galois_apply(k)
            seen.setdefault(img.coeffs, img)
            if n == 1:
                break
        return list(seen.values())

    def minimal_polynomial(self) -> tuple[Fraction, ...]:
        """Monic minimal polynomial over Q, ascending coefficients."""
        orbit = self.galois_orbit()
        poly: list[CycElement] = [CycElement.rational(1, self.conductor)]
        for root in orbit:
            shifted = [CycElement.rational(0, self.conductor)] + poly
            scaled = [c * root for c in poly] + [
                CycElement.rational(0, self.conductor)
            ]
            poly = [a - b for a, b in zip(shifted, scaled)]
        out = []
        for c in poly:
            assert c.is_rational(), "non-rational coefficient in minimal polynomial"
            out.append(c.as_rational())
        assert out[-1] == 1
        return tuple(out)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "CycElement":
        return CycElement(
            int(data["conductor"]),
            tuple(Fraction(s) for s in data["coeffs"]),
        )


# -- dense rational polynomial helpers (used by inverse and pretty-printing) --


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p or [Fraction(0)]


def _poly_degree(p: list[Fraction]) -> int:
    p = _poly_trim(p)
    return -1 if p == [Fraction(0)] else len(p) - 1


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    m = max(len(a), len(b))
    a = a + [Fraction(0)] * (m - len(a))
    b = b + [Fraction(0)] * (m - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(a)[:]
    b = _poly_trim(b)
    db = _poly_degree(b)
    q = [Fraction(0)] * max(len(a) - db, 1)
    while _poly_degree(a) >= db >= 0:
        da = _poly_degree(a)
        c = a[da] / b[db]
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] -= c * b[i]
        a = _poly_trim(a)
    return _poly_trim(q), a


def poly_to_string(coeffs, var: str = "T") -> str:
    """Human form of a rational polynomial, descending powers."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            term = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


# -- named generators ----------------------------------------------------------


def zeta(n: int) -> CycElement:
    """Primitive n-th root of unity zeta_n (zeta_1 = 1, zeta_2 = -1)."""
    return CycElement.from_sparse(n, {1: Fraction(1)})


def lam(s) -> CycElement:
    """lambda_s = zeta_s + 1/zeta_s; lambda_inf = 2, lambda_1 = 2, lambda_2 = -2."""
    if s == INF:
        return CycElement.rational(2)
    s = int(s)
    if s < 1:
        raise TridentError("invalid_index", f"lambda index must be >= 1, got {s}", s=s)
    terms: dict[int, Fraction] = {}
    for e in (1 % s, (s - 1) % s):
        terms[e] = terms.get(e, Fraction(0)) + 1
    return CycElement.from_sparse(s, terms)


def lam2(s) -> CycElement:
    """lambda_(2s) with the convention 2*inf = inf."""
    return lam(INF) if s == INF else lam(2 * int(s))


def same_value(a: CycElement, b: CycElement) -> bool:
    """Mathematical equality across conductors (compare at the lcm)."""
    n = math.lcm(a.conductor, b.conductor)
    return a.embed(n).coeffs == b.embed(n).coeffs
