"""Verification suites shared by the command line and the acceptance tests."""

from __future__ import annotations

import random
import time
from itertools import product

from .algebra.poly import ZERO, Poly
from .algebra.symmetric import elementary_symmetric
from .algebra.variables import BETA, X, Z, x
from .errors import FiveVertexError
from .groth.perm import Perm, all_perms
from .groth.polynomials import cauchy_check, interpolate, interpolation_sum

SUITES = ("ybe", "relations", "thm1", "lemma5", "cauchy", "interpolation", "whitney-qc",
          "whitney-qk", "gk", "numeric-bethe", "thm2")

BETHE_CASES = ((2, 2, (1,)), (2, 3, (1,)), (2, 3, (2,)), (2, 4, (2,)), (3, 3, (2, 1)))


def random_module_member(n: int, rng: random.Random, terms: int = 4) -> Poly:
    """A random polynomial with ``deg_{x_j} <= n - j`` and coefficients in ``Z[beta, z]``."""
    exps = list(product(*[range(n - j + 1) for j in range(1, n + 1)]))
    extras = [Poly.const(1), Poly.var(BETA)] + [Poly.var(Z(j)) for j in range(1, n + 1)]
    out = ZERO
    for _ in range(terms):
        mono = Poly.const(rng.randint(-3, 3) or 1)
        for j, e in enumerate(rng.choice(exps), 1):
            mono = mono * Poly.var(X(j)) ** e
        out = out + mono * rng.choice(extras)
    return out


def _item(check: str, size, fn):
    start = time.perf_counter()
    try:
        detail = fn()
        status = "pass"
        witness = None
    except FiveVertexError as exc:
        detail = None
        status = "fail"
        witness = str(getattr(exc, "witness", None) or exc)
    out = {"check": check, "size": size, "status": status,
           "seconds": round(time.perf_counter() - start, 3)}
    if witness is not None:
        out["witness"] = witness
    if isinstance(detail, dict):
        for key in ("entries", "matched", "instances", "cases", "max_residual", "max_residue",
                    "max_eigen_residual", "solutions", "flag_types", "relations"):
            if key in detail:
                out[key] = detail[key]
    return out


def _suite_items(name: str, max_n: int, seed: int, tol: float, samples: int):
    from . import bethe, vertex

    if name == "ybe":
        for n in range(2, min(max_n, 4) + 1):
            yield f"ybe n={n}", lambda n=n: vertex.ybe_check(n)
        for n in range(2, min(max_n, 3) + 1):
            yield f"ybe-support n={n}", lambda n=n: vertex.support_identities_check(n)
    elif name == "relations":
        for n, N in ((2, 2), (3, 2), (2, 3), (3, 3)):
            if max(n, N) <= max_n:
                for rel in vertex.RELATIONS:
                    yield f"{rel} n={n} N={N}", lambda n=n, N=N, rel=rel: vertex.relations_check(n, N, rel)
    elif name == "thm1":
        for N in range(2, min(max_n, 4) + 1):
            yield f"thm1 N={N}", lambda N=N: vertex.thm1_check(N)
    elif name == "lemma5":
        for N in range(3, min(max_n, 4) + 1):
            yield f"lemma5 N={N}", lambda N=N: vertex.lemma5_check(N)
    elif name == "cauchy":
        for N in range(2, min(max_n, 3) + 1):
            for w in all_perms(N):
                yield f"cauchy w={w}", lambda w=w: cauchy_check(w)
    elif name == "interpolation":
        n = min(max_n, 3)
        rng = random.Random(seed)
        members = [random_module_member(n, rng) for _ in range(20)]
        yield f"interpolation n={n} x20", lambda: _round_trips(members, n)
    elif name in ("whitney-qc", "whitney-qk"):
        for N in range(2, min(max_n, 5) + 1):
            for k in bethe.descending_sequences(N):
                spec = bethe.BetheSpec(len(k) + 1, N, k)
                if name == "whitney-qc":
                    def run(spec=spec):
                        bethe.beta_zero_check(spec)
                        return {"relations": len(bethe.whitney_qc(spec).relations)}
                else:
                    def run(spec=spec):
                        bethe.qk_form_check(spec)
                        return {"relations": len(bethe.whitney_qk(spec).relations)}
                yield f"{name} N={N} k={list(k)}", run
    elif name == "gk":
        yield "gk N=2", _gk_two
        for N in range(1, max(min(max_n, 6), 1) + 1):
            yield f"gk q->0 N={N}", lambda N=N: _gk_classical(N)
    elif name == "numeric-bethe":
        for n, N, k in BETHE_CASES:
            if N <= max_n:
                yield f"numeric-bethe n={n} N={N} k={list(k)}", \
                    lambda n=n, N=N, k=k: numeric_bethe(n, N, k, seed=seed, tol=tol, samples=samples)
    elif name == "thm2":
        for N in range(2, min(max_n, 4) + 1):
            yield f"thm2 N={N}", lambda N=N: bethe.thm2_verify(N)
        if max_n >= 3:
            yield "lemma7 pi=321", lambda: bethe.lemma7_check(Perm([3, 2, 1]))
    else:
        raise ValueError(f"unknown suite {name!r}")


def _round_trips(members, n):
    from .errors import IdentityFailed

    for F in members:
        if interpolation_sum(interpolate(F, n), n) != F:
            raise IdentityFailed("interpolation does not reproduce the input", witness=str(F))
    return {"cases": len(members)}


def _gk_two():
    from .bethe import givental_kim
    from .errors import IdentityFailed

    x1, x2 = Poly.var(x(1)), Poly.var(x(2))
    from .bethe.spec import q_var

    want = [x1 + x2, x1 * x2 + Poly.var(q_var(1))]
    if givental_kim(2) != want:
        raise IdentityFailed("E^2 differs", witness=[str(p) for p in givental_kim(2)])
    return {"cases": 2}


def _gk_classical(N: int):
    from .bethe import givental_kim
    from .bethe.spec import q_var
    from .errors import IdentityFailed

    zero = {q_var(i): Poly.const(0) for i in range(1, N)}
    xs = X.take(N)
    for i, E in enumerate(givental_kim(N), 1):
        if E.subs(zero) != elementary_symmetric(xs, i):
            raise IdentityFailed(f"E^{N}_{i} at q=0 is not e_{i}", witness=str(E))
    return {"cases": N}


def numeric_bethe(n: int, N: int, k, seed: int = 0, tol: float = 1e-9, samples: int = 3,
                  eig_tol: float = 1e-8, beta=-1) -> dict:
    """Solve, then check residues and the eigenvalue equation for every solution."""
    from .bethe import eigenstate_verify, residues, solve_seeded
    from .errors import VerificationFailed

    report = solve_seeded(n, N, k, seed=seed, beta=beta, tol=tol)
    worst_res, worst_eig = 0.0, 0.0
    for sol in report.solutions:
        worst_res = max(worst_res, max(abs(r) for r in residues(report.spec, sol.roots)))
        ev = eigenstate_verify(report.spec, sol.roots, samples=samples, seed=seed, tol=eig_tol)
        worst_eig = max(worst_eig, ev["max_residual"], ev.get("commutator_residual", 0.0))
    out = {"n": n, "N": N, "k": list(k), "solutions": len(report.solutions),
           "max_residual": report.max_residual, "max_residue": worst_res, "max_eigen_residual": worst_eig}
    if worst_res > tol:
        raise VerificationFailed(f"residue {worst_res:.3e} exceeds {tol}", report=out)
    return out


def verify_suite(selector: str = "all", max_n: int = 3, seed: int = 0, tol: float = 1e-9,
                 samples: int = 3, fail_fast: bool = False, progress=None) -> list[dict]:
    names = SUITES if selector == "all" else (selector,)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    results = []
    for name in names:
        for size, fn in _suite_items(name, max_n, seed, tol, samples):
            item = _item(name, size, fn)
            results.append(item)
            if progress:
                progress(item)
            if fail_fast and item["status"] != "pass":
                return results
    return results
