"""Nested Bethe ansatz equations in ⊖ form and with denominators cleared.

For level ``m`` and root ``alpha`` (with ``sigma^(0) = t``)::

    prod_a (1 + beta (s^m_a ⊖ s^m_alpha)) * prod_i (s^m_alpha ⊖ s^(m-1)_i)
        = (-1)^(k_m - 1) q_m prod_b (s^(m+1)_b ⊖ s^m_alpha)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.frac import FONE, Frac, factor_poly, ominus
from ..algebra.poly import ONE, Poly
from ..algebra.serialize import to_json
from ..algebra.variables import BETA, VarId
from ..errors import IdentityFailed
from .spec import BETA_POLY, BetheSpec, q_var


@dataclass
class BAEEquation:
    m: int
    alpha: int
    lhs: object
    rhs: object
    text: str = ""

    def difference(self):
        return self.lhs - self.rhs


@dataclass
class BAESystem:
    spec: BetheSpec
    format: str
    equations: list = field(default_factory=list)

    @property
    def unknowns(self) -> list[VarId]:
        return self.spec.unknowns()

    def render(self, style: str = "text") -> str:
        lines = []
        for eq in self.equations:
            if style == "latex":
                lines.append(f"{Frac.coerce(eq.lhs).latex()} = {Frac.coerce(eq.rhs).latex()}")
            elif self.format == "frac" and eq.text:
                lines.append(eq.text)
            else:
                lines.append(f"{eq.lhs} = {eq.rhs}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.spec.n, "N": self.spec.N, "k": list(self.spec.k), "format": self.format,
            "unknowns": [v.name for v in self.unknowns],
            "equations": [
                {"level": eq.m, "root": eq.alpha, "lhs": to_json(eq.lhs), "rhs": to_json(eq.rhs)}
                for eq in self.equations
            ],
        }


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _ominus_text(a: VarId, b: VarId) -> str:
    return f"({a.text()} ⊖ {b.text()})"


def _equation_frac(spec: BetheSpec, m: int, alpha: int) -> BAEEquation:
    own = spec.roots(m)
    prev = spec.roots(m - 1)
    nxt = spec.roots(m + 1)
    s = own[alpha - 1]
    lhs = FONE
    pieces = []
    for a in own:
        if a != s:
            lhs = lhs * (FONE + Frac.coerce(BETA_POLY) * ominus(a, s))
            pieces.append(f"(1 + beta*{_ominus_text(a, s)})")
    for v in prev:
        lhs = lhs * ominus(s, v)
        pieces.append(_ominus_text(s, v))
    sign = _sign(spec.kk(m) - 1)
    rhs = Frac.coerce(Poly.var(q_var(m)) * sign)
    rpieces = [("-" if sign < 0 else "") + f"q{m}"]
    for v in nxt:
        rhs = rhs * ominus(v, s)
        rpieces.append(_ominus_text(v, s))
    text = " * ".join(pieces) + " = " + " * ".join(rpieces)
    return BAEEquation(m, alpha, lhs, rhs, text)


def _clear(eq: BAEEquation) -> BAEEquation:
    den: dict = {}
    for side in (eq.lhs, eq.rhs):
        for k, e in side.den:
            den[k] = max(den.get(k, 0), e)

    def times(side):
        have = dict(side.den)
        out = side.num
        for k, e in den.items():
            if e > have.get(k, 0):
                out = out * factor_poly(k, e - have.get(k, 0))
        return out

    return BAEEquation(eq.m, eq.alpha, times(eq.lhs), times(eq.rhs))


def bae_generate(spec: BetheSpec, format: str = "frac") -> BAESystem:
    """All ``sum_m k_m`` equations of the nested ansatz.

    ``frac`` keeps the ⊖ form; ``cleared`` multiplies each equation by the
    least common multiple of its ``(1 + beta v)`` denominators.
    """
    if format not in ("frac", "cleared"):
        raise ValueError(f"unknown format {format!r}")
    system = BAESystem(spec, format)
    for m in spec.levels:
        for alpha in range(1, spec.kk(m) + 1):
            eq = _equation_frac(spec, m, alpha)
            system.equations.append(_clear(eq) if format == "cleared" else eq)
    return system


def bae_qc(spec: BetheSpec) -> list[BAEEquation]:
    """The cohomological equations, written down directly::

        prod_i (s^m_a - s^(m-1)_i) = (-1)^(k_m - 1) q_m prod_g (s^(m+1)_g - s^m_a)
    """
    out = []
    for m in spec.levels:
        for a, s in enumerate(spec.roots(m), 1):
            ps = Poly.var(s)
            lhs = ONE
            for v in spec.roots(m - 1):
                lhs = lhs * (ps - Poly.var(v))
            rhs = Poly.var(q_var(m)) * _sign(spec.kk(m) - 1)
            for v in spec.roots(m + 1):
                rhs = rhs * (Poly.var(v) - ps)
            out.append(BAEEquation(m, a, lhs, rhs))
    return out


def beta_zero_check(spec: BetheSpec) -> dict:
    """Cleared equations at ``beta = 0`` against :func:`bae_qc`, side by side."""
    cleared = bae_generate(spec, "cleared").equations
    zero = {BETA: Poly.const(0)}
    for eq, ref in zip(cleared, bae_qc(spec)):
        if eq.lhs.subs(zero) != ref.lhs or eq.rhs.subs(zero) != ref.rhs:
            raise IdentityFailed(f"beta=0 limit differs at level {eq.m}, root {eq.alpha}",
                                 witness=(eq.lhs.subs(zero), eq.rhs.subs(zero), ref.lhs, ref.rhs))
    return {"check": "bae-beta0", "n": spec.n, "N": spec.N, "k": list(spec.k),
            "equations": len(cleared), "status": "pass"}


def qk_form_check(spec: BetheSpec) -> dict:
    """In ``X = 1 + beta sigma`` (``X^(0) = 1 + beta t``) each equation reads::

        prod_l X^m_l prod_i (X^m_a - X^(m-1)_i)
          = (-1)^(k_m-1) q_m beta^(k_(m-1)-k_(m+1)) prod_s X^(m-1)_s
            prod_g (X^(m+1)_g - X^m_a) (X^m_a)^(k_m-k_(m+1))

    Substituting back must give ``beta^(k_(m-1)) (1 + beta s^m_a)`` times the
    cleared equation.
    """
    cleared = bae_generate(spec, "cleared").equations
    for eq in cleared:
        m, a = eq.m, eq.alpha
        X = {lvl: [ONE + BETA_POLY * Poly.var(v) for v in spec.roots(lvl)] for lvl in (m - 1, m, m + 1)}
        xa = X[m][a - 1]
        lhs = ONE
        for v in X[m]:
            lhs = lhs * v
        for v in X[m - 1]:
            lhs = lhs * (xa - v)
        rhs = Poly.var(q_var(m)) * _sign(spec.kk(m) - 1) * BETA_POLY ** (spec.kk(m - 1) - spec.kk(m + 1))
        for v in X[m - 1]:
            rhs = rhs * v
        for v in X[m + 1]:
            rhs = rhs * (v - xa)
        rhs = rhs * xa ** (spec.kk(m) - spec.kk(m + 1))
        scale = BETA_POLY ** spec.kk(m - 1) * xa
        if lhs - rhs != scale * (eq.lhs - eq.rhs):
            raise IdentityFailed(f"X-form mismatch at level {m}, root {a}")
    return {"check": "bae-qk-form", "n": spec.n, "N": spec.N, "k": list(spec.k),
            "equations": len(cleared), "status": "pass"}
