"""Dedekind symbols and sums, negative continued fractions.

All quantities are :class:`fractions.Fraction` or ``int``; nothing here
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

HALF = Fraction(1, 2)


def dedekind_symbol(x) -> Fraction:
    """Return ((x)) = {x} - 1/2 for non-integral x and 0 for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - HALF


@lru_cache(maxsize=4096)
def dedekind_sum(h: int, k: int) -> Fraction:
    """Exact Dedekind sum s(h, k) by the definitional O(k) sum.

    The mu = 0 term vanishes, and for 0 < mu < k the symbol ((mu/k)) is
    (2 mu - k) / 2k, so the whole sum is an integer over 4 k^2.
    """
    if k <= 0:
        raise ValueError(f"dedekind_sum needs k >= 1, got k={k}")
    total = 0
    for mu in range(1, k):
        r = (h * mu) % k
        if r:
            total += (2 * mu - k) * (2 * r - k)
    return Fraction(total, 4 * k * k)


def dedekind_sum_reciprocity(h: int, k: int) -> Fraction:
    """Dedekind sum in O(log k) steps via reciprocity and periodicity."""
    if k <= 0:
        raise ValueError(f"dedekind_sum needs k >= 1, got k={k}")
    h %= k
    if gcd(h, k) != 1:
        g = gcd(h, k)
        # s(h, k) = s(h/g, k/g)
        h, k = h // g, k // g
    sign = 1
    total = Fraction(0)
    while k > 1 and h:
        # s(h,k) = -1/4 + (h/k + k/h + 1/(hk))/12 - s(k,h)
        total += sign * (Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k))
        sign = -sign
        h, k = k % h, h
    return total


def neg_continued_fraction(alpha: int, omega: int) -> tuple[int, ...]:
    """Entries [b1, ..., bk] with alpha/omega = b1 - 1/(b2 - 1/(... - 1/bk)).

    >>> neg_continued_fraction(5, 4)
    (2, 2, 2, 2)
    """
    if not 0 < omega < alpha:
        raise ValueError(f"need 0 < omega < alpha, got alpha={alpha}, omega={omega}")
    if gcd(alpha, omega) != 1:
        raise ValueError(f"gcd(alpha, omega) != 1 for alpha={alpha}, omega={omega}")
    entries = []
    a, w = alpha, omega
    while w:
        c = -(-a // w)
        entries.append(c)
        a, w = w, c * w - a
    return tuple(entries)


def evaluate_neg_continued_fraction(entries: Sequence[int]) -> Fraction:
    if not entries:
        raise ValueError("empty continued fraction")
    value = Fraction(entries[-1])
    for b in reversed(entries[:-1]):
        value = b - 1 / value
    return value
