"""Nested Bethe states and the transfer-matrix eigenvalue test."""

from __future__ import annotations

import cmath
import random

from ..errors import SizeGuardError, VerificationFailed
from ..vertex.monodromy import Chain
from ..vertex.state import StateVector
from .eigen import top_eigenvalue
from .spec import BetheSpec

STATE_LIMIT = 3 ** 5


def nested_state(spec: BetheSpec, roots: dict) -> StateVector:
    """Build ``|psi^(0)⟩`` from the bottom level up.

    Level ``m`` lives on ``k_(m-1)`` sites with inhomogeneities
    ``sigma^(m-1)`` and colors ``m-1..n-1``; its creation operators are
    indexed by the colors ``m..n-1`` relative to ``m-1``.
    """
    beta = spec.beta
    inhom = {0: list(spec.t)} | {m: list(roots[m]) for m in spec.levels}
    top = spec.n - 1
    words = {(top,) * spec.kk(top): 1 + 0j}
    for m in range(top, 0, -1):
        chain = Chain.numeric(spec.n - m + 1, inhom[m - 1], beta)
        acc = StateVector(chain.n, chain.N)
        for word, c in words.items():
            ops = [(w - (m - 1), s) for w, s in zip(word, inhom[m])]
            acc = acc + chain.b_string(ops).scale(c)
        words = {tuple(v + m - 1 for v in w): c for w, c in acc.items()}
    return StateVector(spec.n, spec.N, {bytes(w): c for w, c in words.items()})


def _residual(a: StateVector, b: StateVector, norm: float) -> float:
    return (a - b).norm() / norm


def eigenstate_verify(spec: BetheSpec, roots: dict, samples: int = 3, seed: int = 0,
                      tol: float = 1e-8, commute: bool | None = None, force: bool = False) -> dict:
    """``t(u)|psi⟩ = L^(0)(u)|psi⟩`` at ``samples`` random spectral parameters.

    With ``commute`` (default for ``n >= 3``) also checks
    ``t(u) t(v)|psi⟩ = t(v) t(u)|psi⟩``.
    """
    if spec.n ** spec.N > STATE_LIMIT and not force:
        raise SizeGuardError(f"state space {spec.n}^{spec.N} exceeds {STATE_LIMIT}; pass force")
    psi = nested_state(spec, roots)
    norm = psi.norm()
    if norm == 0:
        raise VerificationFailed("the nested Bethe state vanishes", report={"norm": 0.0})
    chain = Chain.numeric(spec.n, spec.t, spec.beta)
    lam = top_eigenvalue(spec, roots)
    twist = spec.twist()
    rng = random.Random(seed)
    us = [rng.uniform(0.5, 1.5) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi)) for _ in range(samples)]
    residuals = []
    for u in us:
        residuals.append(_residual(chain.transfer(u, twist, psi), psi.scale(lam(u)), norm))
    report = {"check": "eigenstate", "n": spec.n, "N": spec.N, "k": list(spec.k),
              "samples": samples, "residuals": residuals, "max_residual": max(residuals)}
    if commute if commute is not None else spec.n >= 3:
        u, v = us[0], us[1 % len(us)] * 1.1
        tu_tv = chain.transfer(u, twist, chain.transfer(v, twist, psi))
        tv_tu = chain.transfer(v, twist, chain.transfer(u, twist, psi))
        report["commutator_residual"] = _residual(tu_tv, tv_tu, norm)
    worst = max([report["max_residual"], report.get("commutator_residual", 0.0)])
    report["status"] = "pass" if worst <= tol else "fail"
    if worst > tol:
        raise VerificationFailed(f"eigenstate residual {worst:.3e} exceeds {tol}", report=report)
    return report
