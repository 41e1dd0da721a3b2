"""Numeric solutions of the nested Bethe ansatz equations.

Every level is described by its monic root polynomial
``P_m(x) = prod_a (x - sigma^(m)_a)``; the unknowns are the coefficients of
``P_1, ..., P_(n-1)``, i.e. the elementary symmetric functions of each root
set.  With ``E_m = prod_a (1 + beta sigma^(m)_a)`` every root of level ``m``
is a root of the characteristic polynomial::

    g_m(x) = E_m P_(m-1)(x)
             - (-1)^(k_m - 1 + k_(m+1)) q_m E_(m-1) (1 + beta x)^(k_m - k_(m+1)) P_(m+1)(x)

so the equations are ``g_m mod P_m = 0``.  At ``q = 0`` the solutions are
nested subsets ``t ⊃ sigma^(1) ⊃ sigma^(2) ⊃ ...``; each is followed to the
target ``q`` by Newton's method while ``q`` is scaled up from zero.  The
roots are finally read off with :func:`find_roots` and checked against the
cleared equations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..algebra.roots import find_roots
from ..algebra.variables import BETA
from ..errors import DegenerateRoots, NoConvergence
from .equations import bae_generate
from .spec import BetheSpec, check_distinct, draw_params, q_var, root_var


@dataclass
class BetheSolution:
    roots: dict  # level -> list of complex roots
    residual: float = 0.0

    def values(self, spec: BetheSpec) -> dict:
        vals = {BETA: spec.beta}
        for i, t in enumerate(spec.t, 1):
            vals[root_var(0, i)] = t
        for m, qm in enumerate(spec.q, 1):
            vals[q_var(m)] = qm
        for m, rs in self.roots.items():
            for a, r in enumerate(rs, 1):
                vals[root_var(m, a)] = r
        return vals


@dataclass
class SolveReport:
    spec: BetheSpec
    solutions: list = field(default_factory=list)
    starts: int = 0
    lost: int = 0
    max_residual: float = 0.0

    def to_json(self) -> dict:
        def enc(z):
            return [z.real, z.imag]

        return {
            "n": self.spec.n, "N": self.spec.N, "k": list(self.spec.k),
            "beta": enc(complex(self.spec.beta)),
            "t": [enc(v) for v in self.spec.t], "q": [enc(v) for v in self.spec.q],
            "starts": self.starts, "lost_paths": self.lost, "distinct_solutions": len(self.solutions),
            "max_residual": self.max_residual,
            "solutions": [
                {str(m): [enc(r) for r in rs] for m, rs in sol.roots.items()} | {"residual": sol.residual}
                for sol in self.solutions
            ],
        }


# ----- the system in coefficient coordinates -------------------------------------

def _monic(roots) -> np.ndarray:
    return np.poly(np.asarray(roots, dtype=complex)) if len(roots) else np.ones(1, dtype=complex)


def _E(coeffs: np.ndarray, beta: complex) -> complex:
    # prod (1 + beta r) = sum_l (-beta)^l c_l for monic x^k + c_1 x^(k-1) + ...
    return sum(c * (-beta) ** l for l, c in enumerate(coeffs))


class _System:
    def __init__(self, spec: BetheSpec):
        self.spec = spec
        self.sizes = [spec.kk(m) for m in spec.levels]
        self.P0 = _monic(spec.t)
        self.beta = complex(spec.beta)

    def split(self, vec: np.ndarray) -> list[np.ndarray]:
        out, i = [], 0
        for k in self.sizes:
            out.append(np.concatenate([[1 + 0j], vec[i:i + k]]))
            i += k
        return out

    def residual(self, vec: np.ndarray, scale: float) -> np.ndarray:
        spec, beta = self.spec, self.beta
        polys = [self.P0] + self.split(vec) + [np.ones(1, dtype=complex)]
        Es = [_E(p, beta) for p in polys]
        lin = np.array([beta, 1 + 0j])
        parts = []
        for m in spec.levels:
            km, kn = spec.kk(m), spec.kk(m + 1)
            sign = -1 if (km - 1 + kn) % 2 else 1
            term = np.ones(1, dtype=complex)
            for _ in range(km - kn):
                term = np.polymul(term, lin)
            g = np.polysub(Es[m] * polys[m - 1],
                           sign * scale * spec.q[m - 1] * Es[m - 1] * np.polymul(term, polys[m + 1]))
            _, rem = np.polydiv(g, polys[m])
            rem = np.concatenate([np.zeros(km - len(rem), dtype=complex), rem])[-km:]
            parts.append(rem)
        return np.concatenate(parts)

    def jacobian(self, vec: np.ndarray, scale: float) -> np.ndarray:
        f0 = self.residual(vec, scale)
        J = np.empty((len(f0), len(vec)), dtype=complex)
        for j in range(len(vec)):
            h = 1e-7 * max(1.0, abs(vec[j]))
            v = vec.copy()
            v[j] += h
            J[:, j] = (self.residual(v, scale) - f0) / h
        return J

    def newton(self, vec: np.ndarray, scale: float, tol: float = 1e-13, max_iter: int = 12):
        for _ in range(max_iter):
            step = np.linalg.solve(self.jacobian(vec, scale), -self.residual(vec, scale))
            vec = vec + step
            if not np.all(np.isfinite(vec)):
                return None
            if np.linalg.norm(step) <= tol * (1 + np.linalg.norm(vec)):
                return vec
        return None


def _starts(spec: BetheSpec):
    """Nested subsets ``t ⊃ sigma^(1) ⊃ ...`` as lists of root lists."""

    def grow(prev, m):
        if m == spec.n:
            yield []
            return
        for sub in combinations(prev, spec.kk(m)):
            for rest in grow(list(sub), m + 1):
                yield [list(sub)] + rest

    yield from grow(list(spec.t), 1)


def _track(system: _System, vec: np.ndarray, h0: float = 0.05, h_min: float = 1e-5):
    s, h = 0.0, h0
    prev = None
    while s < 1.0:
        s_new = min(1.0, s + h)
        guess = vec if prev is None else vec + (vec - prev[1]) * ((s_new - s) / (s - prev[0]))
        got = None
        try:
            got = system.newton(guess, s_new, tol=1e-11, max_iter=8)
        except np.linalg.LinAlgError:
            got = None
        if got is None or np.linalg.norm(got - vec) > 0.2 * (1 + np.linalg.norm(vec)):
            h /= 2
            if h < h_min:
                raise NoConvergence(f"path stalled at q-scale {s:.6f}")
            continue
        prev = (s, vec)
        s, vec = s_new, got
        h = min(2 * h, 0.1)
    final = system.newton(vec, 1.0)
    if final is None:
        raise NoConvergence("final Newton polish did not converge")
    return final


def _cleared_residuals(spec: BetheSpec, sol: BetheSolution, cleared=None) -> float:
    if cleared is None:
        cleared = bae_generate(spec, "cleared").equations
    vals = sol.values(spec)
    return max(abs(eq.lhs.evaluate(vals) - eq.rhs.evaluate(vals)) for eq in cleared)


class _Polisher:
    """Newton steps on the cleared equations in the root coordinates."""

    def __init__(self, spec: BetheSpec, cleared):
        self.spec = spec
        self.cleared = cleared
        self.unknowns = spec.unknowns()
        self.diffs = [eq.lhs - eq.rhs for eq in cleared]
        self.jac = [[d.diff(v) for v in self.unknowns] for d in self.diffs]

    def __call__(self, sol: BetheSolution, steps: int = 3) -> BetheSolution:
        for _ in range(steps):
            vals = sol.values(self.spec)
            f = np.array([complex(d.evaluate(vals)) for d in self.diffs])
            J = np.array([[complex(e.evaluate(vals)) for e in row] for row in self.jac])
            try:
                step = np.linalg.solve(J, -f)
            except np.linalg.LinAlgError:
                break
            flat = np.array([vals[v] for v in self.unknowns]) + step
            new, i = {}, 0
            for m in self.spec.levels:
                k = self.spec.kk(m)
                new[m] = [complex(c) for c in flat[i:i + k]]
                i += k
            trial = BetheSolution(new)
            if _cleared_residuals(self.spec, trial, self.cleared) >= _cleared_residuals(self.spec, sol, self.cleared):
                break
            sol = trial
        return sol


def bae_solve(spec: BetheSpec, tol: float = 1e-9) -> SolveReport:
    """All solutions reachable from the ``q = 0`` subsets, deduplicated.

    ``spec`` must carry numeric ``t``, ``q`` and ``beta`` (see
    :func:`draw_params`).  Raises :class:`DegenerateRoots` when the
    parameters are not generic.
    """
    check_distinct(spec.t, "inhomogeneities t")
    system = _System(spec)
    cleared = bae_generate(spec, "cleared").equations
    report = SolveReport(spec)
    polish = _Polisher(spec, cleared)
    seen: set = set()
    for start in _starts(spec):
        report.starts += 1
        vec = np.concatenate([_monic(rs)[1:] for rs in start]) if start else np.zeros(0, dtype=complex)
        try:
            vec = _track(system, vec)
        except NoConvergence:
            report.lost += 1
            continue
        roots = {}
        for m, coeffs in zip(spec.levels, system.split(vec)):
            rs = find_roots(coeffs) if len(coeffs) > 1 else []
            check_distinct(rs, f"Bethe roots at level {m}")
            roots[m] = rs
        sol = polish(BetheSolution(roots))
        sol.residual = _cleared_residuals(spec, sol, cleared)
        key = tuple(tuple(sorted((round(r.real, 7), round(r.imag, 7)) for r in roots[m])) for m in spec.levels)
        if key in seen:
            continue
        seen.add(key)
        report.solutions.append(sol)
    if not report.solutions:
        raise NoConvergence("no solution path converged; retry with another seed")
    report.max_residual = max(s.residual for s in report.solutions)
    if report.max_residual > tol:
        raise NoConvergence(f"cleared residual {report.max_residual:.3e} above {tol}")
    return report


def solve_seeded(n: int, N: int, k, seed: int = 0, beta: complex = -1, tol: float = 1e-9,
                 retries: int = 5) -> SolveReport:
    """Draw generic parameters from ``seed`` and solve; redraw on degenerate draws."""
    base = BetheSpec(n, N, tuple(k))
    last = None
    for attempt in range(retries):
        spec = draw_params(base, seed=seed + 1000 * attempt, beta=beta)
        try:
            return bae_solve(spec, tol)
        except (DegenerateRoots, NoConvergence) as exc:
            last = exc
    raise last
