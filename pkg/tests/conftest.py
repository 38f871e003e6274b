from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from seifert_invariants.seifert import SeifertData, brieskorn, normalize

SIGMA_235 = normalize(brieskorn(2, 3, 5))
SIGMA_237 = normalize(brieskorn(2, 3, 7))
D4 = SeifertData(-2, ((2, 1), (2, 1), (2, 1)))

# small groups with varied structure; every entry has |H| <= 60
SMALL = [
    D4,
    SeifertData(-2, ((2, 1), (2, 1), (3, 1))),  # Z/8
    SeifertData(-2, ((2, 1), (4, 1), (4, 3))),  # Z/2 + Z/8
    SeifertData(-2, ((3, 1), (3, 1), (3, 1))),  # order 27
    SeifertData(-3, ((2, 1), (2, 1), (2, 1), (2, 1))),  # order 16, nu = 4
    SeifertData(-2, ((2, 1), (3, 1), (5, 2))),  # Z/23
    SeifertData(-2, ((2, 1), (3, 2), (4, 3))),  # Z/2
    SeifertData(-3, ((2, 1), (2, 1), (2, 1), (2, 1), (2, 1))),  # nu = 5
    SeifertData(-2, ((3, 2), (3, 2), (4, 1))),
    SeifertData(-2, ((2, 1), (3, 2), (5, 1))),  # Z/19
]


def _ident(s):
    return f"b{s.b}_" + "_".join(f"{a}-{w}" for a, w in s.pairs)


@pytest.fixture(params=SMALL, ids=_ident)
def small(request):
    return request.param


@st.composite
def seifert_data(draw, max_alpha=7, max_arms=4, h_cap=60):
    """Valid normalized data with |H| <= h_cap."""
    nu = draw(st.integers(3, max_arms))
    alphas = draw(st.lists(st.integers(2, max_alpha), min_size=nu, max_size=nu))
    omegas = [draw(st.sampled_from([w for w in range(1, a) if gcd(w, a) == 1])) for a in alphas]
    total = sum((Fraction(w, a) for a, w in zip(alphas, omegas)), Fraction(0))
    b = -(total.numerator // total.denominator) - 1 - draw(st.integers(0, 1))
    s = SeifertData(b, tuple(zip(alphas, omegas)))
    assume(s.h_order <= h_cap)
    return s


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
