"""Fraction-free exact linear algebra on small integer matrices."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def bareiss_minors(a: Matrix) -> list[int]:
    """Leading principal minors of a square integer matrix.

    Bareiss elimination without pivoting: the k-th pivot is exactly the k-th
    leading minor, so the run stops (padding with 0) at the first vanishing one.
    """
    n = len(a)
    m = [list(row) for row in a]
    minors = []
    prev = 1
    for k in range(n):
        piv = m[k][k]
        minors.append(piv)
        if piv == 0:
            minors.extend([0] * (n - k - 1))
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return minors


def determinant(a: Matrix) -> int:
    """Determinant via Bareiss elimination with row pivoting."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve(a: Matrix, rhs: Sequence[int]) -> list[Fraction]:
    """Exact solution of a x = rhs for nonsingular integer a.

    Fraction-free forward elimination on the augmented matrix, then
    back substitution in rationals.
    """
    n = len(a)
    m = [list(row) + [rhs[i]] for i, row in enumerate(a)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = acc / m[i][i]
    return x
