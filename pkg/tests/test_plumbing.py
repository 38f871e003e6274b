from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from conftest import D4, SIGMA_235, SIGMA_237, seifert_data
from seifert_invariants.errors import InvalidInputError, NotNegativeDefiniteError
from seifert_invariants.invariants import k2_plus_numvert
from seifert_invariants.plumbing import (
    PlumbingGraph,
    canonical_cycle,
    intersection_determinant,
    intersection_matrix,
    k2_plus_numvert_from_graph,
    to_dot,
    to_plumbing,
)


def test_e8():
    g = to_plumbing(SIGMA_235)
    assert g.weights == (-2,) * 8
    assert [[g.weights[v] for v in arm] for arm in g.arms] == [[-2], [-2, -2], [-2, -2, -2, -2]]
    assert g.is_star_shaped()
    cc = canonical_cycle(g)
    assert cc.coefficients == (0,) * 8 and cc.k_squared == 0
    assert k2_plus_numvert_from_graph(g) == 8


def test_sigma_237_graph():
    g = to_plumbing(SIGMA_237)
    assert g.weights == (-1, -2, -3, -7)
    cc = canonical_cycle(g)
    assert cc.coefficients == (2, 1, 1, 1)
    assert cc.k_squared == -4
    assert k2_plus_numvert_from_graph(g) == 0
    assert abs(intersection_determinant(g)) == 1


def test_d4_graph():
    g = to_plumbing(D4)
    assert g.weights == (-2, -2, -2, -2) and len(g.arms) == 3
    assert abs(intersection_determinant(g)) == 4
    assert k2_plus_numvert_from_graph(g) == 4


def test_single_vertex_matrix():
    assert intersection_matrix(PlumbingGraph((-2,), ())) == [[-2]]


def test_not_negative_definite():
    g = PlumbingGraph((-1, -1), ((0, 1),))
    with pytest.raises(NotNegativeDefiniteError):
        intersection_matrix(g)


def test_not_a_tree():
    with pytest.raises(InvalidInputError):
        PlumbingGraph((-2, -2, -2), ((0, 1),))


def test_dot_export():
    dot = to_dot(to_plumbing(SIGMA_237))
    lines = dot.splitlines()
    assert lines[0] == "graph plumbing {"
    assert lines[1] == '  v0 [label="-1", shape=doublecircle];'
    assert "  v0 -- v3;" in lines


@settings(max_examples=60, deadline=None)
@given(seifert_data(max_alpha=9, max_arms=5, h_cap=10**5))
def test_graph_properties(s):
    g = to_plumbing(s)
    m = intersection_matrix(g)  # raises unless negative definite
    assert g.num_vertices == 1 + sum(len(a) for a in g.arms)
    assert g.is_star_shaped()
    assert abs(intersection_determinant(g)) == s.h_order
    assert k2_plus_numvert_from_graph(g) == k2_plus_numvert(s)
    # independent linear solve
    M = sympy.Matrix(m)
    rhs = sympy.Matrix([w + 2 for w in g.weights])
    r = M.LUsolve(rhs)
    cc = canonical_cycle(g)
    assert [Fraction(int(x.p), int(x.q)) for x in r] == list(cc.coefficients)
    assert abs(M.det()) == s.h_order
