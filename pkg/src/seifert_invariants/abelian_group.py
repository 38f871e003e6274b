"""H_1(M, Z) from the Seifert presentation, in Smith normal form, and its characters.

Generators are g_0 (the generic fiber) and g_1, ..., g_nu (arm ends). In
additive notation the relations are

    -b g_0 - sum_i omega_i g_i = 0,      g_0 - alpha_i g_i = 0.

A character is an exponent tuple (c_1, ..., c_r) against the invariant
factors d_1 | ... | d_r; its value on an element with coordinates (y_j) is
zeta_m^k with k = sum_j c_j y_j (m / d_j) mod m, m the group exponent.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd, lcm, prod
from typing import Iterator, Sequence

from .errors import InternalError
from .seifert import SeifertData


def smith_normal_form(a: Sequence[Sequence[int]]):
    """Return (diag, U, V) with U a V = D, U and V unimodular, diag[i] | diag[i+1].

    Entries of diag are non-negative; the list has min(rows, cols) entries.
    """
    rows, cols = len(a), len(a[0]) if a else 0
    m = [list(r) for r in a]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row dst += q * row src
        m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for r in m:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    add_row(t, i, -q)
                dirty |= m[i][t] != 0
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    add_col(t, j, -q)
                dirty |= m[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
    return [m[i][i] for i in range(min(rows, cols))], u, v


@dataclass(frozen=True)
class Character:
    exponents: tuple[int, ...]

    def is_trivial(self) -> bool:
        return not any(self.exponents)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """An element given by a word g_0^a_0 ... g_nu^a_nu; equality is by coordinates."""

    word: tuple[int, ...]
    coords: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_identity(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class AbelianGroup:
    relation_matrix: tuple[tuple[int, ...], ...]
    divisors: tuple[int, ...]
    generator_images: tuple[tuple[int, ...], ...]
    _labels: dict = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def order(self) -> int:
        return prod(self.divisors)

    @cached_property
    def exponent(self) -> int:
        return reduce(lcm, self.divisors, 1)

    @property
    def num_generators(self) -> int:
        return len(self.generator_images)

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple(c % d for c, d in zip(coords, self.divisors))

    def element_from_word(self, word: Sequence[int]) -> GroupElement:
        word = tuple(int(a) for a in word)
        if len(word) != self.num_generators:
            raise ValueError(f"word needs {self.num_generators} exponents, got {len(word)}")
        coords = [0] * len(self.divisors)
        for a, img in zip(word, self.generator_images):
            for j, y in enumerate(img):
                coords[j] += a * y
        return GroupElement(word, self.reduce(coords))

    @property
    def identity(self) -> GroupElement:
        return self.element_from_word((0,) * self.num_generators)

    def generator(self, i: int) -> GroupElement:
        return self.element_from_word(tuple(int(j == i) for j in range(self.num_generators)))

    def element_order(self, g: GroupElement) -> int:
        return reduce(lcm, (d // gcd(c, d) for c, d in zip(g.coords, self.divisors)), 1)

    def characters(self) -> Iterator[Character]:
        """All |H| characters, lexicographic in the invariant-factor coordinates."""
        for exps in itertools.product(*(range(d) for d in self.divisors)):
            yield Character(exps)

    def evaluate(self, chi: Character, g: GroupElement) -> int:
        """k with chi(g) = zeta_m^k, m = exponent."""
        m = self.exponent
        return sum(c * y * (m // d) for c, y, d in zip(chi.exponents, g.coords, self.divisors)) % m

    def character_order(self, chi: Character) -> int:
        return reduce(lcm, (d // gcd(c, d) for c, d in zip(chi.exponents, self.divisors)), 1)

    def character_power(self, chi: Character, u: int) -> Character:
        return Character(tuple(c * u % d for c, d in zip(chi.exponents, self.divisors)))

    def elements(self) -> list[GroupElement]:
        """All elements in BFS order from the identity, each with a shortest positive word."""
        if self._labels:
            return list(self._labels.values())
        n = self.num_generators
        start = self.identity
        found = {start.coords: start}
        queue = deque([start])
        gens = [self.generator(i) for i in range(n)]
        while queue:
            g = queue.popleft()
            for i, h in enumerate(gens):
                coords = self.reduce([x + y for x, y in zip(g.coords, h.coords)])
                if coords not in found:
                    word = list(g.word)
                    word[i] += 1
                    elt = GroupElement(tuple(word), coords)
                    found[coords] = elt
                    queue.append(elt)
        if len(found) != self.order:
            raise InternalError("generators do not generate the group")
        self._labels.update(found)
        return list(found.values())


def build_group(s: SeifertData) -> AbelianGroup:
    nu = s.nu
    rows = [[-s.b] + [-w for w in s.omegas]]
    for i, alpha in enumerate(s.alphas):
        row = [0] * (nu + 1)
        row[0] = 1
        row[i + 1] = -alpha
        rows.append(row)
    diag, _, v = smith_normal_form(rows)
    if 0 in diag or prod(diag) != s.h_order:
        raise InternalError(f"invariant factors {diag} inconsistent with |H| = {s.h_order}")
    keep = [j for j, d in enumerate(diag) if d != 1]
    divisors = tuple(diag[j] for j in keep)
    images = tuple(tuple(v[i][j] % diag[j] for j in keep) for i in range(nu + 1))
    return AbelianGroup(tuple(tuple(r) for r in rows), divisors, images)


def word_label(word: Sequence[int]) -> str:
    parts = []
    for i, a in enumerate(word):
        if a == 1:
            parts.append(f"g{i}")
        elif a:
            parts.append(f"g{i}^{a}")
    return "*".join(parts) or "1"
