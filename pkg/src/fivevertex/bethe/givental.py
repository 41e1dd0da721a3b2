"""Quantum elementary polynomials from the Givental-Kim determinant."""

from __future__ import annotations

from ..algebra.linalg import determinant
from ..algebra.poly import ONE, ZERO, Poly
from ..algebra.variables import VarId, x
from .spec import q_var

LAMBDA = VarId("lambda")


def gamma_matrix(N: int) -> list[list[Poly]]:
    """``x_i`` on the diagonal, ``q_i`` above it and ``-1`` below it."""
    if N < 1:
        raise ValueError("N must be positive")
    rows = [[ZERO] * N for _ in range(N)]
    for i in range(N):
        rows[i][i] = Poly.var(x(i + 1))
        if i + 1 < N:
            rows[i][i + 1] = Poly.var(q_var(i + 1))
            rows[i + 1][i] = Poly.const(-1)
    return rows


def givental_kim(N: int) -> list[Poly]:
    """``[E_1, ..., E_N]``: the ``lambda^i`` coefficients of ``det(1 + lambda Gamma_N)``."""
    lam = Poly.var(LAMBDA)
    gamma = gamma_matrix(N)
    mat = [[(ONE if i == j else ZERO) + lam * gamma[i][j] for j in range(N)] for i in range(N)]
    by_degree = determinant(mat).coeffs_in(LAMBDA)
    return [by_degree.get(i, ZERO) for i in range(1, N + 1)]
