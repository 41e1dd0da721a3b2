"""Operator identities of the chain, checked on every natural basis vector."""

from __future__ import annotations

import cmath
import random
from typing import Callable

from ..algebra.frac import Frac
from ..algebra.poly import Poly
from ..algebra.variables import BETA, MIDDLE, X, VarId
from ..errors import IdentityFailed, SizeGuardError
from ..groth.divdiff import apply_perm, beta_divdiff
from ..groth.perm import Perm, all_perms
from ..groth.polynomials import groth_value, rename_alphabet
from .bstate import bstate_expand, descending_ops, permuted_ops
from .monodromy import Chain
from .rmatrix import r_entries
from .state import StateVector, all_words

RELATIONS = ("RTT", "comAB", "comDB", "comBB", "comm_same", "comm_mixed")
SYMBOLIC_DIM_LIMIT = 3 ** 5

_BETA = Poly.var(BETA)


def _guard(n: int, N: int, force: bool):
    if n ** N > SYMBOLIC_DIM_LIMIT and not force:
        raise SizeGuardError(
            f"state dimension {n}^{N} exceeds {SYMBOLIC_DIM_LIMIT}; pass force=True (--force) to run anyway"
        )


class _Ring:
    """Scalars, spectral parameters and R-matrix entries for one check run."""

    def __init__(self, chain: Chain, x, y, one, beta, xy_weight, minus):
        self.chain = chain
        self.x, self.y = x, y
        self.one = one
        self.beta = beta
        self.w_xy = xy_weight
        self.xm = minus  # (x - y) as a scalar

    def T(self, r, c, u) -> Callable[[StateVector], StateVector]:
        return lambda s: self.chain.entry(r, c, u, s)

    def R(self, lo: int = 0) -> dict:
        return r_entries(self.chain.n, self.w_xy, self.one, self.beta, lo)

    def f(self, u):
        """``1 + beta u``."""
        return self.one + self.beta * u


def _symbolic_ring(n: int, N: int) -> _Ring:
    from ..algebra.frac import ominus

    chain = Chain.symbolic(n, N)
    x, y = VarId("x", 1), VarId("x", 2)
    px, py = Frac.coerce(Poly.var(x)), Frac.coerce(Poly.var(y))
    ring = _Ring(chain, px, py, Frac.coerce(1), Frac.coerce(_BETA), ominus(x, y), px - py)
    return ring


def _numeric_ring(n: int, N: int, rng: random.Random) -> _Ring:
    draw = lambda: rng.uniform(0.5, 1.5) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))
    beta = draw()
    chain = Chain.numeric(n, [draw() for _ in range(N)], beta)
    x, y = draw(), draw()
    return _Ring(chain, x, y, 1 + 0j, beta, (x - y) / (1 + beta * y), x - y)


def _pairs(ring: _Ring, which: str, b: StateVector):
    """Yield ``(label, lhs, rhs)`` for one relation applied to ``b``."""
    n = ring.chain.n
    x, y, T = ring.x, ring.y, ring.T
    colors = range(1, n)
    if which == "RTT":
        R = ring.R()
        Tx = {(r, c): T(r, c, x)(b) for r in range(n) for c in range(n)}
        for a in range(n):
            for bb in range(n):
                for e in range(n):
                    for f in range(n):
                        lhs = StateVector(n, ring.chain.N)
                        rhs = StateVector(n, ring.chain.N)
                        for c in range(n):
                            for d in range(n):
                                v = R.get((a, bb, c, d))
                                if v is not None:
                                    lhs = lhs + T(c, e, x)(T(d, f, y)(b)).scale(v)
                                v = R.get((c, d, e, f))
                                if v is not None:
                                    rhs = rhs + T(bb, d, y)(Tx[(a, c)]).scale(v)
                        yield f"RTT[{a}{bb},{e}{f}]", lhs, rhs
    elif which == "comAB":
        for i in colors:
            lhs = T(0, 0, x)(T(0, i, y)(b)).scale(y - x)
            rhs = (T(0, i, y)(T(0, 0, x)(b)) - T(0, i, x)(T(0, 0, y)(b))).scale(ring.f(x))
            yield f"comAB[{i}]", lhs, rhs
    elif which == "comDB":
        R = ring.R(lo=1)
        for i in colors:
            for j in colors:
                for k in colors:
                    lhs = T(i, j, x)(T(0, k, y)(b)).scale(ring.xm)
                    acc = StateVector(n, ring.chain.N)
                    for s in colors:
                        for l in colors:
                            v = R.get((l, s, j, k))
                            if v is not None:
                                acc = acc + T(0, s, y)(T(i, l, x)(b)).scale(v)
                    rhs = acc.scale(ring.f(y)) - T(0, j, x)(T(i, k, y)(b)).scale(ring.f(x))
                    yield f"comDB[{i}{j},{k}]", lhs, rhs
    elif which == "comBB":
        R = ring.R(lo=1)
        for i in colors:
            for j in colors:
                lhs = T(0, i, x)(T(0, j, y)(b))
                rhs = StateVector(n, ring.chain.N)
                for r in colors:
                    for s in colors:
                        v = R.get((s, r, i, j))
                        if v is not None:
                            rhs = rhs + T(0, r, y)(T(0, s, x)(b)).scale(v)
                yield f"comBB[{i}{j}]", lhs, rhs
    elif which == "comm_same":
        for i in colors:
            yield f"comm_same[{i}]", T(0, i, x)(T(0, i, y)(b)), T(0, i, y)(T(0, i, x)(b))
    elif which == "comm_mixed":
        for i in colors:
            for j in colors:
                if i < j:
                    lhs = T(0, i, x)(T(0, j, y)(b)).scale(ring.xm)
                    rhs = (T(0, j, x)(T(0, i, y)(b)) - T(0, j, y)(T(0, i, x)(b))).scale(ring.f(x))
                    yield f"comm_mixed[{i}{j}]", lhs, rhs
    else:
        raise ValueError(f"unknown relation {which!r}; choose from {RELATIONS}")


def relations_check(n: int, N: int, which: str = "RTT", mode: str = "symbolic", samples: int = 3,
                    seed: int = 0, tol: float = 1e-10, force: bool = False) -> dict:
    """Verify one commutation relation as an operator identity.

    Both sides are applied to each natural basis vector.  Symbolic mode is
    exact; numeric mode reports the largest relative deviation over random
    parameter draws.
    """
    if which not in RELATIONS:
        raise ValueError(f"unknown relation {which!r}; choose from {RELATIONS}")
    dim = n ** N
    if mode == "symbolic":
        _guard(n, N, force)
        ring = _symbolic_ring(n, N)
        count = 0
        for word in all_words(n, N):
            b = StateVector.basis(n, N, word)
            b = b.map_coeffs(Frac.coerce)
            for label, lhs, rhs in _pairs(ring, which, b):
                count += 1
                if lhs != rhs:
                    raise IdentityFailed(f"{label} fails on |{''.join(map(str, word))}⟩",
                                         witness={"word": list(word), "relation": label})
        return {"check": which, "n": n, "N": N, "mode": mode, "basis": dim,
                "instances": count, "status": "pass"}
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        ring = _numeric_ring(n, N, rng)
        for word in all_words(n, N):
            b = StateVector(n, N, {word: 1 + 0j})
            for label, lhs, rhs in _pairs(ring, which, b):
                scale = max(lhs.norm(), rhs.norm(), 1.0)
                worst = max(worst, (lhs - rhs).norm() / scale)
    report = {"check": which, "n": n, "N": N, "mode": mode, "basis": dim, "samples": samples,
              "max_deviation": worst, "status": "pass" if worst <= tol else "fail"}
    if worst > tol:
        raise IdentityFailed(f"{which} deviates by {worst:.3e}", witness=report)
    return report


# ----- Bethe-vector lemmas --------------------------------------------------------

def _middle_groth(w: Perm) -> Poly:
    return rename_alphabet(groth_value(w), X, MIDDLE, w.N)


def thm1_check(N: int) -> dict:
    """``B_{N-1}(σ_1)...B_1(σ_{N-1})|Ω⟩ = sum_w G_w(σ;⊖t) |ω w^{-1}⟩`` exactly."""
    perms, others = bstate_expand(descending_ops(N, MIDDLE), N)
    if others:
        raise IdentityFailed("non-permutation kets appear", witness=others)
    omega = Perm.longest(N)
    matched = 0
    for w in all_perms(N):
        ketp = omega * w.inverse()
        got = perms.get(ketp, 0)
        want = _middle_groth(w)
        if Poly.coerce(got) != want:
            raise IdentityFailed(f"coefficient of |{ketp}⟩ differs from G_{w}", witness=w)
        matched += 1
    return {"check": "thm1", "N": N, "matched": matched, "status": "pass"}


def lemma5_check(N: int) -> dict:
    """Reordered B-strings equal dbar operators applied to the descending string."""
    chain = Chain.atoms(N, N)
    base = chain.b_string(descending_ops(N, MIDDLE))
    omega = Perm.longest(N - 1)
    done = 0
    for w in all_perms(N - 1):
        lhs = chain.b_string(permuted_ops(w, MIDDLE))
        op = w.inverse() * omega
        rhs = base.map_coeffs(lambda c: apply_perm(c, op, "bar", MIDDLE))
        if lhs != rhs:
            raise IdentityFailed(f"reordering identity fails for w={w}", witness=w)
        done += 1
    return {"check": "lemma5", "N": N, "cases": done, "status": "pass"}


def _bra(p: Perm, coeff=None) -> StateVector:
    N = p.N
    return StateVector(N, N, {bytes(p.apply_to_word()): coeff if coeff is not None else Poly.const(1)})


def _exchange_cases(N: int):
    """``(π, i)`` with ``2 <= i <= N-1`` and ``l(s_i π) > l(π)``."""
    for pi in all_perms(N):
        for i in range(2, N):
            if i not in pi.left_descents():
                yield pi, i


def lemma3_check(N: int) -> dict:
    """``(⟨s_iπ| + β⟨π|) ... B_i B_{i-1} = ⟨π| ... B_{i-1} B_i`` exactly."""
    chain = Chain.atoms(N, N)
    done = 0
    for pi, i in _exchange_cases(N):
        ops = [(N - a, MIDDLE(a)) for a in range(1, N - i + 2)]
        swapped = ops[:-2] + [(ops[-1][0], ops[-2][1]), (ops[-2][0], ops[-1][1])]
        si_pi = Perm.simple(i, N) * pi
        start = _bra(si_pi) + _bra(pi, _BETA)
        lhs = chain.b_string_right(start, ops)
        rhs = chain.b_string_right(_bra(pi), swapped)
        if lhs != rhs:
            raise IdentityFailed(f"exchange identity fails for π={pi}, i={i}", witness=(pi, i))
        done += 1
    return {"check": "lemma3", "N": N, "cases": done, "status": "pass"}


def lemma4_check(N: int) -> dict:
    """``⟨s_iπ| ... = ∂^β_{N-i} ⟨π| ...`` exactly."""
    chain = Chain.atoms(N, N)
    done = 0
    for pi, i in _exchange_cases(N):
        ops = [(N - a, MIDDLE(a)) for a in range(1, N - i + 2)]
        lhs = chain.b_string_right(_bra(Perm.simple(i, N) * pi), ops)
        base = chain.b_string_right(_bra(pi), ops)
        rhs = base.map_coeffs(lambda c: beta_divdiff(c, N - i, "plain", MIDDLE))
        if lhs != rhs:
            raise IdentityFailed(f"divided-difference transport fails for π={pi}, i={i}",
                                 witness=(pi, i))
        done += 1
    return {"check": "lemma4", "N": N, "cases": done, "status": "pass"}


def lemma2_check(N: int) -> dict:
    """``⟨1..k,0,k+1..N-1| B_{N-1}(σ_1)...B_1(σ_{N-1}) = G_{ρ_k^{-1} ω}(σ;⊖t) ⟨Ω|``."""
    chain = Chain.atoms(N, N)
    omega = Perm.longest(N)
    for k in range(N):
        word = list(range(1, k + 1)) + [0] + list(range(k + 1, N))
        start = StateVector(N, N, {bytes(word): Poly.const(1)})
        got = chain.b_string_right(start, descending_ops(N, MIDDLE))
        want = _middle_groth(Perm.rho(k, N).inverse() * omega)
        expected = StateVector(N, N, {bytes(N): want})
        if got != expected:
            raise IdentityFailed(f"bra identity fails for k={k}", witness=k)
    return {"check": "lemma2", "N": N, "cases": N, "status": "pass"}
