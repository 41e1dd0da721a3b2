"""Coefficient identities from the Bethe equations via Vieta's formula.

Cohomological flavor (``beta = 0``): the level-``m`` roots are roots of::

    p_m(x) = prod_i (x - s^(m-1)_i) + (-1)^(k_m - k_(m+1)) q_m prod_j (x - s^(m+1)_j)

whose remaining ``k_(m-1) - k_m`` roots are fresh symbols ``eta^(m)``.
K-theoretic flavor: with ``X = 1 + beta s`` the roots ``X^(m)`` and fresh
``Y^(m)`` are the roots of a polynomial with leading coefficient
``e_(k_m)(X^(m))``.  Every claim below is checked as an exact polynomial
identity in these symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.poly import ONE, ZERO, Poly, poly_exact_div
from ..algebra.symmetric import elementary_symmetric as e
from ..algebra.variables import BETA, VarId
from ..errors import IdentityFailed
from .equations import bae_qc
from .spec import BetheSpec, q_var, root_var

XVAR = VarId("x", 0)
_x = Poly.var(XVAR)


def eta_var(m: int, b: int) -> VarId:
    return VarId("eta", m, b)


def X_var(m: int, a: int) -> VarId:
    return VarId("bigX", m, a)


def Y_var(m: int, b: int) -> VarId:
    return VarId("bigY", m, b)


@dataclass
class Relation:
    m: int
    l: int
    lhs: Poly
    rhs: Poly

    def __str__(self):
        return f"[m={self.m}, l={self.l}] {self.lhs} = {self.rhs}"


@dataclass
class RelationSet:
    flavor: str
    spec: BetheSpec
    relations: list = field(default_factory=list)
    aux: dict = field(default_factory=dict)
    presentation: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def render(self) -> str:
        lines = [str(r) for r in self.relations]
        if self.presentation:
            lines.append("")
            lines.extend(self.presentation)
        return "\n".join(lines)

    def to_json(self) -> dict:
        from ..algebra.serialize import to_json

        return {
            "flavor": self.flavor, "n": self.spec.n, "N": self.spec.N, "k": list(self.spec.k),
            "relations": [{"level": r.m, "l": r.l, "lhs": to_json(r.lhs), "rhs": to_json(r.rhs)}
                          for r in self.relations],
            "aux": {str(m): [v.name for v in vs] for m, vs in self.aux.items()},
            "presentation": self.presentation,
            "checks": self.checks,
        }


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def _prod_linear(values) -> Poly:
    out = ONE
    for v in values:
        out = out * (_x - v)
    return out


def _coeff(p: Poly, d: int) -> Poly:
    return p.coeffs_in(XVAR).get(d, ZERO)


def _fail(msg, witness=None):
    raise IdentityFailed(msg, witness=witness)


# ----- beta = 0 -------------------------------------------------------------------

def _c(i: int, n: int) -> str:
    if i == 0:
        return "1"
    return f"c(S_{i})"


def whitney_qc(spec: BetheSpec, verify: bool = True) -> RelationSet:
    """Vieta identities of ``p_m``, one per ``l = 0..k_(m-1)`` and level."""
    out = RelationSet("qc", spec)
    bae = {(eq.m, eq.alpha): eq for eq in bae_qc(spec)}
    for m in spec.levels:
        kp, km, kn = spec.kk(m - 1), spec.kk(m), spec.kk(m + 1)
        prev = [Poly.var(v) for v in spec.roots(m - 1)]
        own = [Poly.var(v) for v in spec.roots(m)]
        nxt = [Poly.var(v) for v in spec.roots(m + 1)]
        etas = [eta_var(m, b) for b in range(1, kp - km + 1)]
        eta = [Poly.var(v) for v in etas]
        out.aux[m] = etas
        qm = Poly.var(q_var(m))
        # the polynomial, written through its coefficients
        poly = ZERO
        for i in range(kp + 1):
            poly = poly + e(prev, i) * _x ** (kp - i) * _sign(i)
        for j in range(kn + 1):
            poly = poly + qm * e(nxt, j) * _x ** (kn - j) * _sign(km - kn + j)
        if verify:
            for a, s in enumerate(own, 1):
                eq = bae[(m, a)]
                if poly.subs({XVAR: s}) != eq.lhs - eq.rhs:
                    _fail(f"level {m}: polynomial at root {a} differs from the equation")
            factored = _prod_linear(own) * _prod_linear(eta)
        for l in range(kp + 1):
            lhs = ZERO
            for i in range(l + 1):
                lhs = lhs + e(own, i) * e(eta, l - i)
            rhs = e(prev, l) + qm * e(nxt, kn - kp + l) * _sign(kp - km)
            if verify:
                if _coeff(factored, kp - l) != lhs * _sign(l):
                    _fail(f"level {m}, l={l}: expansion of the factored form")
                if _coeff(poly, kp - l) * _sign(l) != rhs:
                    _fail(f"level {m}, l={l}: coefficient of the polynomial")
            out.relations.append(Relation(m, l, lhs, rhs))
    n = spec.n
    for m in spec.levels:
        i = n - m
        sign = "-" if (spec.kk(m - 1) - spec.kk(m)) % 2 else "+"
        out.presentation.append(
            f"{_c(i, n)} * c(S_{i + 1}/S_{i}) = c(S_{i + 1}) {sign} q{m} * {_c(i - 1, n)}")
    out.presentation.append(f"c(S_0) = 1, c(S_{n}) = sum_i e_i(t)")
    if verify:
        out.checks = {"bae_polynomial": "pass", "vieta": "pass"}
    return out


# ----- K-theoretic ------------------------------------------------------------------

def _beta(beta) -> Poly:
    if beta in (None, "sym"):
        return Poly.var(BETA)
    return Poly.const(int(beta))


def whitney_qk(spec: BetheSpec, beta="sym", verify: bool = True) -> RelationSet:
    """Emit the reduced identities (``relQKc`` shape) for every level.

    Verification covers: the polynomial vanishes at ``X^(m)_a`` exactly by
    the ``X``-form equation; its factored form reproduces the unreduced
    identities; those at ``l = k_(m-1)`` divide to the substitution rule;
    and unreduced = ``e_(k_m)(X)`` * reduced - ``q`` term * substitution rule.
    """
    B = _beta(beta)
    out = RelationSet("qk", spec)
    subs_rules = {}
    for m in spec.levels:
        kp, km, kn = spec.kk(m - 1), spec.kk(m), spec.kk(m + 1)
        Xp = [Poly.var(X_var(m - 1, a)) for a in range(1, kp + 1)]
        Xm = [Poly.var(X_var(m, a)) for a in range(1, km + 1)]
        Xn = [Poly.var(X_var(m + 1, a)) for a in range(1, kn + 1)]
        ys = [Y_var(m, b) for b in range(1, kp - km + 1)]
        Y = [Poly.var(v) for v in ys]
        out.aux[m] = ys
        qm = Poly.var(q_var(m))
        d = kp - kn
        ekm, ekp = e(Xm, km), e(Xp, kp)
        qterm = qm * (-B) ** d
        # coefficients a_(kp-l)
        poly = ZERO
        for l in range(kp + 1):
            a = e(Xp, l) * ekm * _sign(l) + qm * B ** d * ekp * e(Xn, l - kp + km) * _sign(d + l)
            poly = poly + a * _x ** (kp - l)
        sub_lhs, sub_rhs = ekp, ekm * e(Y, kp - km)
        subs_rules[m] = (sub_lhs, sub_rhs)
        if verify:
            for a, xa in enumerate(Xm, 1):
                lhs = ekm
                for v in Xp:
                    lhs = lhs * (xa - v)
                rhs = qm * _sign(km - 1) * B ** d * ekp * xa ** (km - kn)
                for v in Xn:
                    rhs = rhs * (v - xa)
                if poly.subs({XVAR: xa}) != lhs - rhs:
                    _fail(f"level {m}: polynomial at X root {a} differs from the equation")
            factored = ekm * _prod_linear(Xm) * _prod_linear(Y)
        for l in range(kp + 1):
            mixed = ZERO
            for i in range(l + 1):
                mixed = mixed + e(Xm, i) * e(Y, l - i)
            unreduced = (ekm * mixed, ekm * e(Xp, l) + qterm * ekp * e(Xn, l - kp + km))
            reduced = (mixed, e(Xp, l) + qterm * e(Xn, l - kp + km) * e(Y, kp - km))
            if verify:
                if _coeff(factored, kp - l) * _sign(l) != unreduced[0]:
                    _fail(f"level {m}, l={l}: expansion of the factored form")
                if _coeff(poly, kp - l) * _sign(l) != unreduced[1]:
                    _fail(f"level {m}, l={l}: coefficient of the polynomial")
                diff_u = unreduced[0] - unreduced[1]
                diff_r = reduced[0] - reduced[1]
                sub_diff = sub_lhs - sub_rhs
                if l == kp and poly_exact_div(diff_u, ekm) != -sub_diff:
                    _fail(f"level {m}: top identity does not reduce to the substitution rule")
                if diff_u != ekm * diff_r - qterm * e(Xn, l - kp + km) * sub_diff:
                    _fail(f"level {m}, l={l}: reduced identity does not follow")
            out.relations.append(Relation(m, l, *reduced))
    n = spec.n
    for m in spec.levels:
        i = n - m
        dm = spec.kk(m - 1) - spec.kk(m)
        prev = "1" if i - 1 == 0 else f"lambda_y(S_{i - 1})"
        out.presentation.append(
            f"lambda_y(S_{i}) * lambda_y(S_{i + 1}/S_{i}) = lambda_y(S_{i + 1})"
            f" + q{m}/(1 - q{m}) * y^{dm} * ({prev} - lambda_y(S_{i})) * det(S_{i + 1}/S_{i})")
        out.presentation.append(
            f"  with e_l(Y^({m})) = wedge^l(S_{i + 1}/S_{i}) for l < {dm},"
            f" e_{dm}(Y^({m})) = det(S_{i + 1}/S_{i})/(1 - q{m})")
    out.presentation.append(f"lambda_y(S_0) = 1, lambda_y(S_{n}) = prod_i (1 + y X^(0)_i)")
    if verify:
        out.checks = {"bae_polynomial": "pass", "vieta": "pass", "substitution": "pass", "reduction": "pass"}
    return out


def descending_sequences(N: int):
    """Every ``(N, k)`` flag type: nonempty strictly descending ``k`` below ``N``."""
    from itertools import combinations

    for size in range(1, N):
        for combo in combinations(range(N - 1, 0, -1), size):
            yield combo


def whitney_sweep(max_N: int = 5) -> dict:
    """Run both flavors and the equation-level checks for all flag types."""
    from .equations import beta_zero_check, qk_form_check

    count = 0
    for N in range(2, max_N + 1):
        for k in descending_sequences(N):
            spec = BetheSpec(len(k) + 1, N, k)
            whitney_qc(spec)
            whitney_qk(spec)
            beta_zero_check(spec)
            qk_form_check(spec)
            count += 1
    return {"check": "whitney-sweep", "max_N": max_N, "flag_types": count, "status": "pass"}


__all__ = ["Relation", "RelationSet", "whitney_qc", "whitney_qk", "whitney_sweep",
           "descending_sequences", "root_var"]
