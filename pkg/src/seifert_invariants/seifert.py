"""Seifert invariants of a Seifert fibered rational homology sphere over S^2.

Unnormalized data is a list of pairs (alpha_i, beta_i) with orbifold Euler
number e = -sum beta_i/alpha_i. Normalized data is (b; (alpha_i, omega_i))
with 0 <= omega_i < alpha_i, omega_i = -beta_i mod alpha_i and
e = b + sum omega_i/alpha_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm, prod
from typing import Iterable

from .errors import (
    InternalError,
    InvalidInputError,
    NonNegativeEulerError,
    NotCoprimeError,
    TooFewFibersError,
)


def _check_pairs(pairs: tuple[tuple[int, int], ...], second: str) -> None:
    if len(pairs) < 3:
        raise TooFewFibersError(f"need at least 3 singular fibers, got nu={len(pairs)}")
    for i, (alpha, x) in enumerate(pairs):
        if alpha < 2:
            raise InvalidInputError(f"pair {i}: alpha={alpha} must be >= 2")
        if gcd(alpha, x) != 1:
            raise NotCoprimeError(f"pair {i}: gcd(alpha={alpha}, {second}={x}) != 1")


def _as_pairs(pairs: Iterable) -> tuple[tuple[int, int], ...]:
    out = []
    for p in pairs:
        a, x = p
        out.append((int(a), int(x)))
    return tuple(out)


@dataclass(frozen=True)
class UnnormalizedSeifert:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))
        _check_pairs(self.pairs, "beta")
        if self.e >= 0:
            raise NonNegativeEulerError(f"e = {self.e} >= 0: not a singularity link")

    @property
    def e(self) -> Fraction:
        return -sum((Fraction(beta, alpha) for alpha, beta in self.pairs), Fraction(0))


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants with the derived scalars of the link.

    Attributes:
        b: central integer, b <= e < 0.
        pairs: tuple of (alpha_i, omega_i), order preserved as given.
    """

    b: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))
        _check_pairs(self.pairs, "omega")
        for i, (alpha, omega) in enumerate(self.pairs):
            if not 0 <= omega < alpha:
                raise InvalidInputError(f"pair {i}: need 0 <= omega={omega} < alpha={alpha}")
        if self.e >= 0:
            raise NonNegativeEulerError(f"e = {self.e} >= 0: not a singularity link")

    @property
    def nu(self) -> int:
        return len(self.pairs)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def omegas(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.pairs)

    @cached_property
    def e(self) -> Fraction:
        return self.b + sum((Fraction(w, a) for a, w in self.pairs), Fraction(0))

    @cached_property
    def chi(self) -> Fraction:
        return 2 - sum((Fraction(a - 1, a) for a in self.alphas), Fraction(0))

    @cached_property
    def alpha_lcm(self) -> int:
        return reduce(lcm, self.alphas)

    @cached_property
    def o(self) -> int:
        """Order of the class of the generic fiber in H."""
        return _integral(self.alpha_lcm * -self.e, "alpha*|e|")

    @cached_property
    def h_order(self) -> int:
        return _integral(prod(self.alphas) * -self.e, "alpha_1...alpha_nu*|e|")

    def unnormalized(self) -> UnnormalizedSeifert:
        """Unnormalized form with beta_i = -omega_i, b folded into the first pair."""
        pairs = [(a, -w) for a, w in self.pairs]
        a0, beta0 = pairs[0]
        pairs[0] = (a0, beta0 - self.b * a0)
        return UnnormalizedSeifert(tuple(pairs))

    def to_json(self) -> dict:
        return {"b": self.b, "pairs": [list(p) for p in self.pairs]}


def _integral(q: Fraction, what: str) -> int:
    if q.denominator != 1 or q <= 0:
        raise InternalError(f"{what} = {q} is not a positive integer")
    return q.numerator


def normalize(u: UnnormalizedSeifert) -> SeifertData:
    omegas = [(-beta) % alpha for alpha, beta in u.pairs]
    rest = u.e - sum((Fraction(w, a) for (a, _), w in zip(u.pairs, omegas)), Fraction(0))
    if rest.denominator != 1:
        raise InternalError(f"b = {rest} is not an integer")
    return SeifertData(rest.numerator, tuple((a, w) for (a, _), w in zip(u.pairs, omegas)))


def derived_scalars(s: SeifertData) -> tuple[Fraction, Fraction, int, int, int]:
    """(e, chi_M, alpha, o, |H|)."""
    return s.e, s.chi, s.alpha_lcm, s.o, s.h_order


def brieskorn(a1: int, a2: int, a3: int) -> UnnormalizedSeifert:
    """Seifert invariants of the Brieskorn sphere Sigma(a1, a2, a3), e = -1/(a1 a2 a3)."""
    exps = (a1, a2, a3)
    if min(exps) < 2:
        raise InvalidInputError(f"Brieskorn exponents must be >= 2, got {exps}")
    for i in range(3):
        for j in range(i + 1, 3):
            if gcd(exps[i], exps[j]) != 1:
                raise NotCoprimeError(f"{exps} not pairwise coprime")
    a = a1 * a2 * a3
    betas = [pow(a // ai, -1, ai) for ai in exps]
    excess = sum(a // ai * bi for ai, bi in zip(exps, betas)) - 1
    betas[0] -= excess // a * a1
    return UnnormalizedSeifert(tuple(zip(exps, betas)))
