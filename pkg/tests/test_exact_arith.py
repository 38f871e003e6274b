from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from seifert_invariants.exact_arith import (
    dedekind_sum,
    dedekind_sum_reciprocity,
    dedekind_symbol,
    evaluate_neg_continued_fraction,
    neg_continued_fraction,
)


@pytest.mark.parametrize(
    "x, expected",
    [(0, 0), (Fraction(1, 2), 0), (Fraction(-1, 3), Fraction(1, 6)), (Fraction(7, 4), Fraction(1, 4))],
)
def test_dedekind_symbol(x, expected):
    assert dedekind_symbol(x) == expected
    assert oracles.symbol(x) == expected


@pytest.mark.parametrize(
    "h, k, expected",
    [(5, 1, 0), (1, 3, Fraction(1, 18)), (-1, 7, Fraction(-5, 14))],
)
def test_dedekind_sum_examples(h, k, expected):
    assert oracles.dedekind_sum(h, k) == expected
    assert dedekind_sum(h, k) == expected


def test_dedekind_sum_rejects_bad_k():
    with pytest.raises(ValueError):
        dedekind_sum(1, 0)
    with pytest.raises(ValueError):
        dedekind_sum(1, -3)


@given(st.integers(-300, 300), st.integers(1, 60))
def test_dedekind_sum_matches_definition(h, k):
    assert dedekind_sum(h, k) == oracles.dedekind_sum(h, k)


@given(st.integers(-500, 500), st.integers(1, 80))
def test_oddness_and_periodicity(h, k):
    assert dedekind_sum(-h, k) == -dedekind_sum(h, k)
    assert dedekind_sum(h, k) == dedekind_sum(h % k, k)


@given(st.integers(-500, 500), st.integers(1, 120))
def test_reciprocity_evaluator_agrees(h, k):
    assert dedekind_sum_reciprocity(h, k) == dedekind_sum(h, k)


def test_reciprocity_sweep():
    for k in range(2, 201):
        for h in range(1, k):
            if gcd(h, k) == 1:
                lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
                assert lhs == Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12


@pytest.mark.parametrize("alpha, omega, expected", [(7, 1, (7,)), (5, 4, (2, 2, 2, 2)), (3, 2, (2, 2)), (7, 3, (3, 2, 2))])
def test_neg_continued_fraction(alpha, omega, expected):
    assert neg_continued_fraction(alpha, omega) == expected


def test_continued_fraction_round_trip():
    for alpha in range(2, 201):
        for omega in range(1, alpha):
            if gcd(alpha, omega) == 1:
                cf = neg_continued_fraction(alpha, omega)
                assert min(cf) >= 2
                assert oracles.eval_cf(cf) == Fraction(alpha, omega)
                assert evaluate_neg_continued_fraction(cf) == Fraction(alpha, omega)


@pytest.mark.parametrize("alpha, omega", [(6, 4), (5, 0), (5, 5), (5, 7), (4, -1)])
def test_continued_fraction_rejects(alpha, omega):
    with pytest.raises(ValueError):
        neg_continued_fraction(alpha, omega)
