"""Clamped lattice-point sums over l: the Dolgachev-Pinkham invariant and Poincare coefficients."""
from __future__ import annotations

from .errors import InternalError
from .seifert import SeifertData

TAIL_AUDIT = 10


def floor_sum(s: SeifertData, l: int) -> int:
    """sum_i floor(-l omega_i / alpha_i)."""
    return sum((-l * w) // a for a, w in s.pairs)


def poincare_term(s: SeifertData, l: int) -> int:
    """Unclamped 1 - lb + sum floor(-l omega_i/alpha_i)."""
    return 1 - l * s.b + floor_sum(s, l)


def dp_term(s: SeifertData, l: int) -> int:
    """Unclamped -1 + lb - sum floor(-l omega_i/alpha_i)."""
    return -1 + l * s.b - floor_sum(s, l)


def dp_bound(s: SeifertData) -> int:
    """Every l beyond floor((nu-2)/|e|) has dp_term <= 0."""
    q = (s.nu - 2) / -s.e
    return q.numerator // q.denominator


def dp_invariant(s: SeifertData) -> int:
    bound = dp_bound(s)
    for l in range(bound + 1, bound + 1 + TAIL_AUDIT):
        if dp_term(s, l) > 0:
            raise InternalError(f"positive DP term at l={l} beyond bound {bound}")
    return sum(max(0, dp_term(s, l)) for l in range(bound + 1))


def poincare_coefficients(s: SeifertData, terms: int) -> list[int]:
    """Coefficients of the Poincare series for l = 0..terms."""
    if terms < 0:
        raise ValueError("terms must be >= 0")
    return [max(0, poincare_term(s, l)) for l in range(terms + 1)]
