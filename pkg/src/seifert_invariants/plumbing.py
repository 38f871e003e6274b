"""Star-shaped plumbing graph of a Seifert link and its canonical cycle.

Weights are stored as self-intersections E_v.E_v: the central vertex carries
b and the j-th vertex of arm i carries -b_ij, where alpha_i/omega_i has
negative continued fraction [b_i1, ..., b_ik].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, NotNegativeDefiniteError
from .exact_arith import neg_continued_fraction
from .linalg import bareiss_minors, determinant, solve
from .seifert import SeifertData


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree. Vertex 0 is the center; arms list vertex indices outward."""

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    arms: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise InvalidInputError("empty graph")
        if len(self.edges) != n - 1:
            raise InvalidInputError("graph is not a tree: wrong edge count")
        adj = self.adjacency()
        seen, stack = {0}, [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise InvalidInputError("graph is not connected")

    @property
    def num_vertices(self) -> int:
        return len(self.weights)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.weights]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(x) for x in self.adjacency()]

    @property
    def arm_ends(self) -> tuple[int, ...]:
        return tuple(arm[-1] for arm in self.arms)

    def is_star_shaped(self) -> bool:
        deg = self.degrees()
        return deg[0] >= 3 and all(d <= 2 for d in deg[1:])


def to_plumbing(s: SeifertData) -> PlumbingGraph:
    weights = [s.b]
    edges = []
    arms = []
    for alpha, omega in s.pairs:
        arm = []
        prev = 0
        for entry in neg_continued_fraction(alpha, omega):
            v = len(weights)
            weights.append(-entry)
            edges.append((prev, v))
            arm.append(v)
            prev = v
        arms.append(tuple(arm))
    return PlumbingGraph(tuple(weights), tuple(edges), tuple(arms))


def _raw_matrix(g: PlumbingGraph) -> list[list[int]]:
    n = g.num_vertices
    m = [[0] * n for _ in range(n)]
    for v, w in enumerate(g.weights):
        m[v][v] = w
    for u, v in g.edges:
        m[u][v] = m[v][u] = 1
    return m


def is_negative_definite(m: list[list[int]]) -> bool:
    """Sylvester's criterion on -m."""
    return all(x > 0 for x in bareiss_minors([[-x for x in row] for row in m]))


def intersection_matrix(g: PlumbingGraph) -> list[list[int]]:
    m = _raw_matrix(g)
    if not is_negative_definite(m):
        raise NotNegativeDefiniteError("intersection form is not negative definite")
    return m


@dataclass(frozen=True)
class CanonicalCycle:
    coefficients: tuple[Fraction, ...]
    k_squared: Fraction


def canonical_cycle(g: PlumbingGraph) -> CanonicalCycle:
    """Solve Z_K.E_v = E_v.E_v + 2 for all v; K^2 = Z_K.Z_K."""
    m = _raw_matrix(g)
    rhs = [w + 2 for w in g.weights]
    try:
        r = solve(m, rhs)
    except ZeroDivisionError:
        raise InvalidInputError("intersection matrix is singular") from None
    k2 = sum((rv * c for rv, c in zip(r, rhs)), Fraction(0))
    return CanonicalCycle(tuple(r), k2)


def k2_plus_numvert_from_graph(g: PlumbingGraph) -> Fraction:
    return canonical_cycle(g).k_squared + g.num_vertices


def intersection_determinant(g: PlumbingGraph) -> int:
    return determinant(_raw_matrix(g))


def to_dot(g: PlumbingGraph) -> str:
    """DOT text; center first, then arms in input order."""
    lines = ["graph plumbing {"]
    order = [0] + [v for arm in g.arms for v in arm]
    order += [v for v in range(g.num_vertices) if v not in set(order)]
    for v in order:
        shape = ", shape=doublecircle" if v == 0 else ""
        lines.append(f'  v{v} [label="{g.weights[v]}"{shape}];')
    for u, v in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
