"""Complex polynomial roots by Durand–Kerner simultaneous iteration."""

from __future__ import annotations

from typing import Sequence

from ..errors import NoConvergence

SEED = 0.4 + 0.9j
MAX_ITER = 1000
STEP_TOL = 1e-12
RESIDUAL_TOL = 1e-10


def horner(coeffs: Sequence[complex], z: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def _derivative(coeffs):
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def root_residual(coeffs: Sequence[complex], r: complex) -> float:
    return abs(horner(coeffs, r)) / (1 + sum(abs(c) for c in coeffs))


def find_roots(coeffs: Sequence[complex], *, max_iter: int = MAX_ITER,
               step_tol: float = STEP_TOL, residual_tol: float = RESIDUAL_TOL) -> list[complex]:
    """All complex roots of ``coeffs[0]*z^n + ... + coeffs[n]``.

    Coefficients are listed from the highest degree down.  The seeds are
    ``SEED**k``; the output is sorted by (real, imag) after rounding so the
    result is deterministic.  Each root is polished by a few Newton steps
    and then checked against ``residual_tol``.
    """
    coeffs = [complex(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    if abs(coeffs[0]) <= 1e-12:
        raise ValueError("leading coefficient is numerically zero")
    lead = coeffs[0]
    monic = [c / lead for c in coeffs]
    n = len(monic) - 1
    if n == 1:
        roots = [-monic[1]]
    else:
        roots = [SEED ** k for k in range(n)]
        converged = False
        for _ in range(max_iter):
            biggest = 0.0
            new = []
            for i, z in enumerate(roots):
                denom = 1 + 0j
                for j, w in enumerate(roots):
                    if j != i:
                        denom *= z - w
                if denom == 0:
                    denom = 1e-300
                step = horner(monic, z) / denom
                new.append(z - step)
                biggest = max(biggest, abs(step) / max(1.0, abs(z)))
            roots = new
            if biggest < step_tol:
                converged = True
                break
        if not converged and any(root_residual(coeffs, r) > residual_tol for r in roots):
            raise NoConvergence(f"Durand-Kerner did not converge in {max_iter} iterations")
    dmonic = _derivative(monic)
    polished = []
    for r in roots:
        for _ in range(3):
            d = horner(dmonic, r)
            if d == 0:
                break
            step = horner(monic, r) / d
            if not step == step or abs(step) > 1e-6 * max(1.0, abs(r)):
                break
            r2 = r - step
            if abs(horner(monic, r2)) >= abs(horner(monic, r)):
                break
            r = r2
        polished.append(r)
    bad = [r for r in polished if root_residual(coeffs, r) > residual_tol]
    if bad:
        raise NoConvergence(f"root residual above {residual_tol}: {bad[0]}")
    return sorted(polished, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def poly_from_roots(roots: Sequence[complex], lead: complex = 1) -> list[complex]:
    """Coefficients (highest first) of ``lead * prod(z - r)``."""
    coeffs = [complex(lead)]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0j], [0j] + coeffs)]
    return coeffs
