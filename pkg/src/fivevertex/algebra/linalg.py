"""Exact linear algebra over the polynomial ring."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import ONE, ZERO, Poly


def determinant(matrix: Sequence[Sequence]) -> Poly:
    """Laplace expansion along rows, memoized on the set of used columns.

    Zero entries are skipped, so sparse (e.g. tridiagonal) matrices cost
    far less than the 2^n worst case.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    rows = [[Poly.coerce(e) for e in row] for row in matrix]

    @lru_cache(maxsize=None)
    def minor(row: int, used: int) -> Poly:
        if row == n:
            return ONE
        acc = ZERO
        sign_base = 0
        for col in range(n):
            if used >> col & 1:
                sign_base += 1
                continue
            entry = rows[row][col]
            if not entry:
                continue
            # sign counts the free columns to the left of col
            sign = -1 if (col - sign_base) % 2 else 1
            acc = acc + entry * minor(row + 1, used | (1 << col)) * sign
        return acc

    return minor(0, 0)


def solve_rational(columns: Sequence[Poly], target: Poly):
    """Rational ``c`` with ``sum c_i columns[i] == target``, or ``None``.

    Columns are compared coefficient-wise over their monomials; free
    variables of an underdetermined system are set to zero.
    """
    monos = sorted({m for p in list(columns) + [target] for m in p.terms})
    rows = [
        [Fraction(p.terms.get(m, 0)) for p in columns] + [Fraction(target.terms.get(m, 0))]
        for m in monos
    ]
    pivots = []
    r = 0
    for col in range(len(columns)):
        pr = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i, row in enumerate(rows):
            if i != r and row[col] != 0:
                f = row[col]
                rows[i] = [a - f * b for a, b in zip(row, rows[r])]
        pivots.append(col)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            return None
    sol = [Fraction(0)] * len(columns)
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return sol
