"""Exact arithmetic in Q(zeta_m).

Elements live in the group ring Q[x]/(x^m - 1) as sparse {exponent: Fraction}
maps, which makes products of roots of unity cheap. Zero tests, equality,
rationality and inversion go through the canonical remainder modulo the
cyclotomic polynomial Phi_m, i.e. through the value at zeta_m.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Mapping

from .errors import NotRationalError


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1]  # den is monic
        out[k] = q
        if q:
            for i, c in enumerate(den):
                num[k + i] -= q * c
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=64)
def ramanujan_sums(d: int) -> tuple[int, ...]:
    """c_d(j) = Tr_{Q(zeta_d)/Q}(zeta_d^j) for j = 0..d-1."""
    phi_d = euler_phi(d)
    out = []
    for j in range(d):
        g = gcd(j, d)
        out.append(_mobius(d // g) * phi_d // euler_phi(d // g))
    return tuple(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, x in enumerate(b):
                a[k + i] -= c * x
    r = a[: len(b) - 1]
    return q, _trim(r)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class Cyclotomic:
    """An element of Q(zeta_m) given by a representative sum c_k zeta_m^k."""

    __slots__ = ("m", "terms", "_canon")
    __hash__ = None  # equality crosses conductors; no consistent hash

    def __init__(self, m: int, terms: Mapping[int, Fraction] | None = None):
        if m < 1:
            raise ValueError(f"conductor must be >= 1, got {m}")
        self.m = m
        clean: dict[int, Fraction] = {}
        for k, c in (terms or {}).items():
            if c:
                k %= m
                v = clean.get(k, 0) + Fraction(c)
                if v:
                    clean[k] = v
                else:
                    clean.pop(k, None)
        self.terms = clean
        self._canon = None

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> Cyclotomic:
        return cls(m, {k: Fraction(1)})

    @classmethod
    def rational(cls, q, m: int = 1) -> Cyclotomic:
        return cls(m, {0: Fraction(q)})

    def __repr__(self):
        body = " + ".join(f"({c})*z^{k}" for k, c in sorted(self.terms.items())) or "0"
        return f"Cyclotomic({self.m}: {body})"

    def promote(self, m: int) -> Cyclotomic:
        if m % self.m:
            raise ValueError(f"conductor {self.m} does not divide {m}")
        f = m // self.m
        return Cyclotomic(m, {k * f: c for k, c in self.terms.items()})

    def _coerce(self, other) -> tuple[Cyclotomic, Cyclotomic]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other, self.m)
        m = lcm(self.m, other.m)
        a = self if self.m == m else self.promote(m)
        b = other if other.m == m else other.promote(m)
        return a, b

    def __add__(self, other):
        a, b = self._coerce(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms.get(k, 0) + c
        return Cyclotomic(a.m, terms)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        m = a.m
        terms: dict[int, Fraction] = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                k = (k1 + k2) % m
                terms[k] = terms.get(k, 0) + c1 * c2
        return Cyclotomic(m, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result, base = Cyclotomic.rational(1, self.m), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        a, b = self._coerce(other)
        return a * b.invert()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other, self.m) * self.invert()

    def canonical(self) -> tuple[Fraction, ...]:
        """Coefficients of the remainder modulo Phi_m (length phi(m), trailing zeros kept)."""
        if self._canon is None:
            phi = cyclotomic_polynomial(self.m)
            deg = len(phi) - 1
            top = max(self.terms, default=0)
            poly = [Fraction(0)] * max(top + 1, deg)
            for k, c in self.terms.items():
                poly[k] += c
            for k in range(len(poly) - 1, deg - 1, -1):
                c = poly[k]
                if c:
                    for i in range(deg):
                        if phi[i]:
                            poly[k - deg + i] -= c * phi[i]
                    poly[k] = Fraction(0)
            self._canon = tuple(poly[:deg])
        return self._canon

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def __eq__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._coerce(other)
        return (a - b).is_zero()

    def is_rational(self) -> bool:
        return not any(self.canonical()[1:])

    def to_rational(self) -> Fraction:
        canon = self.canonical()
        if any(canon[1:]):
            raise NotRationalError(f"{self!r} is not rational")
        return canon[0] if canon else Fraction(0)

    def galois(self, u: int) -> Cyclotomic:
        """Image under zeta_m -> zeta_m^u, u a unit mod m."""
        if gcd(u, self.m) != 1:
            raise ValueError(f"{u} is not a unit mod {self.m}")
        return Cyclotomic(self.m, {k * u: c for k, c in self.terms.items()})

    def conjugate(self) -> Cyclotomic:
        return Cyclotomic(self.m, {-k: c for k, c in self.terms.items()})

    def trace(self) -> Fraction:
        """Tr_{Q(zeta_m)/Q}."""
        sums = ramanujan_sums(self.m)
        return sum((c * sums[k] for k, c in self.terms.items()), Fraction(0))

    def invert(self) -> Cyclotomic:
        """Inverse via extended Euclid against Phi_m in Q[x]."""
        a = _trim(list(self.canonical()))
        if not a:
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # Phi_m irreducible, so the last nonzero remainder is a constant
        c = r1[0]
        return Cyclotomic(self.m, {k: x / c for k, x in enumerate(s1)})
