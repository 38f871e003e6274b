from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import D4, SIGMA_235, SIGMA_237, seifert_data
from seifert_invariants.errors import (
    InvalidInputError,
    NonNegativeEulerError,
    NotCoprimeError,
    TooFewFibersError,
)
from seifert_invariants.seifert import SeifertData, UnnormalizedSeifert, brieskorn, derived_scalars, normalize


def test_normalize_sigma_237():
    s = normalize(UnnormalizedSeifert(((2, 1), (3, -1), (7, -1))))
    assert (s.b, s.omegas, s.e) == (-1, (1, 1, 1), Fraction(-1, 42))


def test_normalize_shifted_235():
    s = normalize(UnnormalizedSeifert(((2, 1), (3, 1), (5, 1))))
    assert (s.b, s.omegas, s.e) == (-3, (1, 2, 4), Fraction(-31, 30))


def test_positive_euler_rejected():
    with pytest.raises(NonNegativeEulerError):
        UnnormalizedSeifert(((2, -1), (3, -2), (5, -4)))


def test_distinct_diagnostics():
    with pytest.raises(TooFewFibersError):
        UnnormalizedSeifert(((2, 1), (3, 1)))
    with pytest.raises(NotCoprimeError):
        UnnormalizedSeifert(((2, 1), (4, 2), (5, 1)))
    with pytest.raises(NonNegativeEulerError):
        SeifertData(0, ((2, 1), (3, 1), (5, 1)))
    with pytest.raises(InvalidInputError):
        SeifertData(-2, ((2, 3), (3, 1), (5, 1)))


@pytest.mark.parametrize(
    "s, expected",
    [
        (SIGMA_237, (Fraction(-1, 42), Fraction(-1, 42), 42, 1, 1)),
        (D4, (Fraction(-1, 2), Fraction(1, 2), 2, 1, 4)),
        (SIGMA_235, (Fraction(-1, 30), Fraction(1, 30), 30, 1, 1)),
    ],
)
def test_derived_scalars(s, expected):
    assert derived_scalars(s) == expected


@pytest.mark.parametrize("triple, e", [((2, 3, 5), Fraction(-1, 30)), ((2, 3, 7), Fraction(-1, 42)), ((3, 4, 5), Fraction(-1, 60))])
def test_brieskorn(triple, e):
    u = brieskorn(*triple)
    assert tuple(a for a, _ in u.pairs) == triple
    assert u.e == e
    assert normalize(u).h_order == 1


def test_brieskorn_not_coprime():
    with pytest.raises(NotCoprimeError, match="not pairwise coprime"):
        brieskorn(2, 3, 4)


@given(seifert_data(max_alpha=12, max_arms=5, h_cap=10**6))
def test_normalize_idempotent_and_bounds(s):
    assert normalize(s.unnormalized()) == s
    assert s.b <= s.e < 0


@given(seifert_data(max_alpha=12, max_arms=5, h_cap=10**6), st.data())
def test_section_shift_invariance(s, data):
    u = s.unnormalized()
    i = data.draw(st.integers(0, s.nu - 1))
    j = data.draw(st.integers(0, s.nu - 1))
    k = data.draw(st.integers(-3, 3))
    pairs = list(u.pairs)
    # moving k*alpha between two betas keeps e fixed
    pairs[i] = (pairs[i][0], pairs[i][1] + k * pairs[i][0])
    pairs[j] = (pairs[j][0], pairs[j][1] - k * pairs[j][0])
    shifted = UnnormalizedSeifert(tuple(pairs))
    assert shifted.e == u.e
    assert normalize(shifted) == s


@given(st.sampled_from([(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 4, 5), (2, 7, 9), (5, 7, 11)]))
def test_brieskorn_integral_homology_sphere(triple):
    assert normalize(brieskorn(*triple)).h_order == 1
