"""Reidemeister-Turaev torsion of a Seifert link at t = 1, for every spin^c structure.

Fourier route. For a nontrivial character chi put c_0 = chi(g_0),
c_i = chi(g_i) and

    P_chi(t) = (t^alpha c_0 - 1)^(nu-2) / prod_i (t^(alpha/alpha_i) c_i - 1).

Its limit at t = 1 is found by counting vanishing factors: the numerator
vanishes to order nu-2 iff c_0 = 1, and c_i = 1 forces c_0 = 1. The torsion
of sigma = h_sigma . sigma_can is

    T_sigma(1) = (1/|H|) sum_{chi != 1} conj(chi(h_sigma)) lim P_chi(t).

The character sum is evaluated one Galois orbit at a time: the orbit of a
character of order d contributes the trace from Q(zeta_d) of one term.

Closed-form route (canonical structure only):

    T_can(1) = DP_M + (2 - chi_M)/4 + sum_i s(beta_i, alpha_i) - E.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .abelian_group import AbelianGroup, Character, GroupElement, build_group
from .cyclotomic import Cyclotomic, ramanujan_sums
from .errors import InternalError
from .exact_arith import dedekind_sum
from .seifert import SeifertData
from .series import dp_invariant


@dataclass(frozen=True)
class SpincStructure:
    """sigma = h_sigma . sigma_can with h_sigma = g_0^a_0 ... g_nu^a_nu."""

    word: tuple[int, ...]
    element: GroupElement
    a_tilde: Fraction

    @property
    def is_canonical(self) -> bool:
        return self.element.is_identity()


def spinc_from_word(s: SeifertData, G: AbelianGroup, word: Sequence[int]) -> SpincStructure:
    word = tuple(int(a) for a in word)
    if len(word) != s.nu + 1:
        raise ValueError(f"spin^c word needs {s.nu + 1} exponents, got {len(word)}")
    a_tilde = s.alpha_lcm * (word[0] + sum((Fraction(a, al) for a, al in zip(word[1:], s.alphas)), Fraction(0)))
    return SpincStructure(word, G.element_from_word(word), a_tilde)


def canonical_spinc(s: SeifertData, G: AbelianGroup) -> SpincStructure:
    return spinc_from_word(s, G, (0,) * (s.nu + 1))


@dataclass(frozen=True)
class LaurentData:
    """Coefficients of (t^o - 1)^-2, (t^o - 1)^-1 and the constant term."""

    pole2: Fraction
    pole1: Fraction
    constant: Fraction


# --- limit of P_chi at t = 1 -------------------------------------------------

def character_exponents(G: AbelianGroup, chi: Character) -> tuple[int, list[int]]:
    """(d, [k_0, ..., k_nu]) with chi(g_j) = zeta_d^k_j and d the order of chi."""
    d = G.character_order(chi)
    step = G.exponent // d
    ks = []
    for j in range(G.num_generators):
        k = G.evaluate(chi, G.generator(j))
        ks.append(k // step)
    return d, ks


def _mul_root_minus_one(vec: list[int], k: int, d: int) -> list[int]:
    """vec * (x^k - 1) in Z[x]/(x^d - 1)."""
    return [vec[(j - k) % d] - vec[j] for j in range(d)]


def _mul_inverse_numerator(vec: list[int], k: int, d: int) -> tuple[list[int], int]:
    """vec * sum_{j<n} j x^(kj) in Z[x]/(x^d - 1), n the order of x^k.

    At x = zeta_d this sum equals n / (zeta_d^k - 1), so the pair (result, n)
    represents vec / (zeta_d^k - 1). Along each coset p + <k> the product is
    a circulant, evaluated in O(n) by W[p+k] = W[p] + T - n V[p+k].
    """
    g = gcd(k, d)
    n = d // g
    out = [0] * d
    for p in range(g):
        w = sum(j * vec[(p - k * j) % d] for j in range(1, n))
        total = sum(vec[(p + k * j) % d] for j in range(n))
        q = p
        out[q] = w
        for _ in range(n - 1):
            q = (q + k) % d
            w += total - n * vec[q]
            out[q] = w
    return out, n


def _limit_vector(d: int, ks: Sequence[int], alphas: Sequence[int]) -> tuple[list[int], int]:
    """lim_{t->1} P_chi(t) as (integer vector over zeta_d^j, denominator)."""
    nu = len(alphas)
    k0, arm = ks[0] % d, [k % d for k in ks[1:]]
    vec = [0] * d
    den = 1
    if k0:
        vec[0] = 1
        for _ in range(nu - 2):
            vec = _mul_root_minus_one(vec, k0, d)
        others = arm
    else:
        fixed = [i for i, k in enumerate(arm) if k == 0]
        if len(fixed) > nu - 2:
            raise InternalError("nontrivial character fixes nu-1 arm generators")
        if len(fixed) < nu - 2:
            return vec, 1
        vec[0] = prod(alphas[i] for i in fixed)
        others = [k for k in arm if k]
    for k in others:
        vec, n = _mul_inverse_numerator(vec, k, d)
        den *= n
    return vec, den


def limit_p_hat(s: SeifertData, G: AbelianGroup, chi: Character) -> Cyclotomic:
    """lim_{t->1} P_chi(t) in Q(zeta_m), m the exponent of H."""
    if chi.is_trivial():
        raise ValueError("limit_p_hat is defined for nontrivial characters only")
    d, ks = character_exponents(G, chi)
    vec, den = _limit_vector(d, ks, s.alphas)
    step = G.exponent // d
    return Cyclotomic(G.exponent, {j * step: Fraction(c, den) for j, c in enumerate(vec) if c})


# --- Fourier sums ------------------------------------------------------------

def character_orbits(G: AbelianGroup) -> list[tuple[Character, int]]:
    """Galois orbits of nontrivial characters as (representative, order)."""
    divs = G.divisors
    seen = set()
    orbits = []
    for chi in G.characters():
        if chi.is_trivial() or chi.exponents in seen:
            continue
        d = G.character_order(chi)
        for u in range(1, d):
            if gcd(u, d) == 1:
                seen.add(tuple(c * u % q for c, q in zip(chi.exponents, divs)))
        orbits.append((chi, d))
    return orbits


@dataclass
class _OrbitTerm:
    d: int
    vec: list[int]
    den: int
    chi: Character


def _orbit_terms(s: SeifertData, G: AbelianGroup) -> list[_OrbitTerm]:
    terms = []
    for chi, d in character_orbits(G):
        _, ks = character_exponents(G, chi)
        vec, den = _limit_vector(d, ks, s.alphas)
        if any(vec):
            terms.append(_OrbitTerm(d, vec, den, chi))
    return terms


def _orbit_sum(G: AbelianGroup, terms: list[_OrbitTerm], h: GroupElement) -> Fraction:
    """sum over chi != 1 of conj(chi(h)) lim P_chi, via traces of orbit representatives."""
    total = Fraction(0)
    for t in terms:
        step = G.exponent // t.d
        kh = G.evaluate(t.chi, h) // step
        rs = ramanujan_sums(t.d)
        acc = sum(c * rs[(j - kh) % t.d] for j, c in enumerate(t.vec) if c)
        total += Fraction(acc, t.den)
    return total


def torsion_at_one(
    s: SeifertData,
    G: AbelianGroup | None = None,
    sigma: SpincStructure | None = None,
    method: str = "orbits",
) -> Fraction:
    """T_{M,sigma}(1) by Fourier inversion; sigma defaults to sigma_can.

    method="orbits" sums Galois traces per orbit; method="direct" adds every
    character's limit in Q(zeta_m) and extracts the rational at the end.
    """
    G = G if G is not None else build_group(s)
    h = sigma.element if sigma is not None else G.identity
    if method == "orbits":
        return _orbit_sum(G, _orbit_terms(s, G), h) / G.order
    if method == "direct":
        total = Cyclotomic(G.exponent)
        for chi in G.characters():
            if chi.is_trivial():
                continue
            value = limit_p_hat(s, G, chi)
            total = total + value * Cyclotomic.root_of_unity(G.exponent, -G.evaluate(chi, h))
        return total.to_rational() / G.order
    raise ValueError(f"unknown method {method!r}")


def torsion_table(s: SeifertData, G: AbelianGroup | None = None) -> list[tuple[GroupElement, Fraction]]:
    """T_{M, h.sigma_can}(1) for every h in H, identity first."""
    G = G if G is not None else build_group(s)
    terms = _orbit_terms(s, G)
    return [(h, _orbit_sum(G, terms, h) / G.order) for h in G.elements()]


# --- closed form ---------------------------------------------------------------

def dedekind_total(s: SeifertData) -> Fraction:
    """sum_i s(beta_i, alpha_i) with beta_i = -omega_i."""
    return sum((dedekind_sum(-w, a) for a, w in s.pairs), Fraction(0))


def constant_E(s: SeifertData) -> Fraction:
    e = s.e
    defect = [1 - Fraction(1, a) for a in s.alphas]
    cross = sum(
        (defect[i] * defect[j] for i in range(len(defect)) for j in range(i + 1, len(defect))),
        Fraction(0),
    )
    return (
        -(e + 1) * (e + 5) / (12 * e)
        + sum(defect, Fraction(0)) / 4
        + sum((x * (4 + Fraction(1, a)) for x, a in zip(defect, s.alphas)), Fraction(0)) / (12 * e)
        - cross / (4 * e)
    )


def laurent_lhs(s: SeifertData) -> LaurentData:
    """Expansion of sum_{l>=0} (1 - lb + sum floor(-l omega_i/alpha_i)) t^(ol)."""
    return LaurentData(-s.e, -s.e - s.chi / 2, (2 - s.chi) / 4 + dedekind_total(s))


def laurent_p1(s: SeifertData) -> LaurentData:
    """Expansion of P_1(t)/|H|."""
    return LaurentData(-s.e, -s.e - s.chi / 2, constant_E(s))


def torsion_closed_form(s: SeifertData, dp: int | None = None) -> Fraction:
    lhs, rhs = laurent_lhs(s), laurent_p1(s)
    if (lhs.pole2, lhs.pole1) != (rhs.pole2, rhs.pole1):
        raise InternalError("pole parts of the two expansions differ")
    dp = dp_invariant(s) if dp is None else dp
    return dp + lhs.constant - rhs.constant


# --- equivariant series --------------------------------------------------------

def equivariant_coefficient(s: SeifertData, word: Sequence[int], l: int) -> int:
    a0, arm = word[0], word[1:]
    value = 1 + a0 - l * s.b + sum((-l * w + a) // al for (al, w), a in zip(s.pairs, arm))
    return max(0, value)


def equivariant_coefficients(
    s: SeifertData, sigma: SpincStructure | Sequence[int], window: range
) -> list[tuple[int, int]]:
    """(l, coefficient of t^(o l + a_tilde)) for l in window."""
    word = sigma.word if isinstance(sigma, SpincStructure) else tuple(sigma)
    return [(l, equivariant_coefficient(s, word, l)) for l in window]
