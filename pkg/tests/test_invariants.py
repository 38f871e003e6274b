import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import D4, SIGMA_235, SIGMA_237, seifert_data
from seifert_invariants.abelian_group import build_group
from seifert_invariants.exact_arith import dedekind_sum
from seifert_invariants.invariants import (
    casson_walker,
    compute_report,
    conjecture_gap,
    gompf_theta,
    k2_plus_numvert,
    sw_invariant,
    verify_identity,
)
from seifert_invariants.seifert import SeifertData, brieskorn, normalize
from seifert_invariants.series import dp_invariant, dp_term, poincare_coefficients, poincare_term
from seifert_invariants.torsion import spinc_from_word, torsion_at_one

FIXTURES = {"237": SIGMA_237, "235": SIGMA_235, "D4": D4}


@pytest.mark.parametrize(
    "name, lam, k2v, dp, sw0, theta",
    [
        ("237", 1, 0, 1, 1, -2),
        ("235", 1, 8, 0, 1, 6),
        ("D4", Fraction(1, 2), 4, 0, Fraction(1, 2), 2),
    ],
)
def test_fixture_values(name, lam, k2v, dp, sw0, theta):
    s = FIXTURES[name]
    assert casson_walker(s) == lam
    assert k2_plus_numvert(s) == k2v
    assert dp_invariant(s) == dp
    assert sw_invariant(s) == sw0
    assert gompf_theta(s) == theta


@pytest.mark.parametrize("name, side", [("237", 1), ("D4", Fraction(1, 2)), ("235", 1)])
def test_verify_identity_fixtures(name, side):
    assert verify_identity(FIXTURES[name]) == (side, side, True)


def test_sw_noncanonical():
    G = build_group(D4)
    sigma = spinc_from_word(D4, G, (0, 1, 0, 0))
    assert sw_invariant(D4, sigma, G) == Fraction(1, 8) - Fraction(1, 8)


def test_conjecture_gap():
    assert conjecture_gap(SIGMA_237, 1) == 0
    assert conjecture_gap(D4, 0) == 0
    assert conjecture_gap(SIGMA_237, 0) == 1
    with pytest.raises(ValueError):
        conjecture_gap(D4, -1)


def test_poincare_237():
    coeffs = poincare_coefficients(SIGMA_237, 21)
    assert coeffs[0] == 1 and coeffs[1] == 0
    assert [coeffs[l] for l in (6, 12, 14, 21)] == [1, 1, 1, 1]


@pytest.mark.parametrize("triple", [(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 4, 5), (2, 3, 11)])
def test_poincare_brieskorn(triple):
    s = normalize(brieskorn(*triple))
    assert poincare_coefficients(s, 250) == oracles.brieskorn_poincare(*triple, 250)


def test_dp_brute_force_tail():
    rng = random.Random(3)
    for _ in range(200):
        nu = rng.randint(3, 6)
        pairs = []
        for _ in range(nu):
            a = rng.randint(2, 15)
            w = rng.choice([w for w in range(1, a) if gcd(a, w) == 1])
            pairs.append((a, w))
        total = sum(Fraction(w, a) for a, w in pairs)
        b = -(total.numerator // total.denominator) - 1 - rng.randint(0, 2)
        s = SeifertData(b, tuple(pairs))
        brute = sum(max(0, dp_term(s, l)) for l in range(2000))
        assert dp_invariant(s) == brute


@settings(max_examples=80, deadline=None)
@given(seifert_data(max_alpha=10, max_arms=5, h_cap=10**6), st.integers(0, 500))
def test_dp_and_poincare_terms(s, l):
    # max(0, x) - max(0, -x) = x with x the Poincare term
    coeff = max(0, poincare_term(s, l))
    assert coeff - max(0, dp_term(s, l)) == 1 - l * s.b + sum((-l * w) // a for a, w in s.pairs)


@settings(max_examples=60, deadline=None)
@given(seifert_data(max_alpha=9, max_arms=5, h_cap=600), st.randoms(use_true_random=False))
def test_permutation_invariance(s, rnd):
    pairs = list(s.pairs)
    rnd.shuffle(pairs)
    t = SeifertData(s.b, tuple(pairs))
    for f in (casson_walker, k2_plus_numvert, dp_invariant, torsion_at_one):
        assert f(s) == f(t)


@settings(max_examples=60, deadline=None)
@given(seifert_data(max_alpha=10, max_arms=5, h_cap=10**6))
def test_beta_representative_choice(s):
    shifted = sum((dedekind_sum(-w + a, a) for a, w in s.pairs), Fraction(0))
    assert shifted == sum((dedekind_sum(-w, a) for a, w in s.pairs), Fraction(0))


@settings(max_examples=60, deadline=None)
@given(seifert_data(max_alpha=9, max_arms=5, h_cap=800))
def test_master_identity(s):
    r = compute_report(s)
    assert r.verdict
    assert r.all_ok
    assert conjecture_gap(s, r.dp) == 0
