"""Exact linear algebra over the integers and rationals.

Everything here works on plain nested lists/tuples of ``int`` or
``fractions.Fraction``; nothing ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def bareiss_det(matrix: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve(matrix: Matrix, rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` for a nonsingular integer ``matrix``.

    The right-hand side may be rational; it is scaled to integers, the
    augmented system is reduced with Bareiss elimination and only the
    back-substitution divides.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve needs a square system")
    if n == 0:
        return []
    rhs = [Fraction(v) for v in rhs]
    scale = lcm(*(v.denominator for v in rhs))
    a = [list(row) + [int(v * scale)] for row, v in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise ZeroDivisionError("singular system")
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return [v / scale for v in x]


def principal_submatrix(matrix: Matrix, indices: Sequence[int]) -> list[list[int]]:
    return [[matrix[i][j] for j in indices] for i in indices]


def congruence_diagonal(matrix: Matrix) -> list[Fraction]:
    """Diagonal of a form congruent to the symmetric ``matrix`` over Q.

    Symmetric pivoting: a nonzero diagonal entry is swapped into place;
    when the remaining diagonal is all zero but some off-diagonal entry
    ``a[i][j]`` is not, row/column ``j`` is added to row/column ``i``,
    which puts ``2*a[i][j]`` on the diagonal.
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    diag: list[Fraction] = []
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if pair is None:
                diag.extend([Fraction(0)] * (n - k))
                return diag
            i, j = pair
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
        diag.append(pivot)
    return diag
