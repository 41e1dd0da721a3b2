"""Transfer-matrix eigenvalues of the nested Bethe states.

The recursion runs from the top level down, with ``sigma^(0) = t``::

    L^(n-1)(u) = b_(n-1)
    L^(m-1)(u) = b_(m-1) prod_a (s^m_a ⊖ u)^(-1)
                 + prod_a (u ⊖ s^(m-1)_a) / prod_b (u ⊖ s^m_b) * L^(m)(u)

``L^(0)`` is the eigenvalue of ``t(u)``; it is free of poles at the roots
``s^(1)_a`` exactly when the first-level equations hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..algebra.poly import ONE, Poly
from ..algebra.variables import BETA, VarId, b as b_var
from .spec import BetheSpec, check_distinct, root_var

U = VarId("u")


class RatFunc:
    """A quotient of two polynomials; no cancellation is attempted."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        self.num = Poly.coerce(num)
        self.den = Poly.coerce(den)

    @staticmethod
    def coerce(v) -> "RatFunc":
        return v if isinstance(v, RatFunc) else RatFunc(v)

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def equals(self, other) -> bool:
        o = RatFunc.coerce(other)
        return self.num * o.den == o.num * self.den

    def evaluate(self, values) -> complex:
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _ominus(a, b, beta):
    return (a - b) / (1 + beta * b)


@dataclass
class EigenData:
    level: int
    formula: str
    value: Callable  # u -> eigenvalue of the level-m transfer matrix

    def __call__(self, u):
        return self.value(u)


def _formula(spec: BetheSpec, m: int) -> str:
    if m == spec.n - 1:
        return f"L^({m})(u) = b{m}"
    prev = "t_i" if m == 0 else f"sigma^({m})_i"
    return (f"L^({m})(u) = b{m} * prod_a (sigma^({m + 1})_a ⊖ u)^-1"
            f" + prod_i (u ⊖ {prev}) / prod_a (u ⊖ sigma^({m + 1})_a) * L^({m + 1})(u)")


def eigenvalue_chain(spec: BetheSpec, roots: dict | None = None, twist=None, beta=None) -> list[EigenData]:
    """``[L^(n-1), ..., L^(0)]`` as callables of ``u``.

    ``roots`` maps each level to its numeric roots; without it everything
    is symbolic and calling the result with a :class:`VarId` (or ``Poly``)
    returns a :class:`RatFunc`.  ``twist`` defaults to ``spec.twist()`` for
    numeric data and to the symbols ``b_i`` otherwise.
    """
    symbolic = roots is None
    if symbolic:
        lv = {m: [RatFunc(Poly.var(v)) for v in spec.roots(m)] for m in range(spec.n)}
        bs = twist or [RatFunc(Poly.var(b_var(i))) for i in range(spec.n)]
        beta = RatFunc(Poly.var(BETA)) if beta is None else beta
    else:
        lv = {0: list(spec.t)} | {m: list(roots[m]) for m in spec.levels}
        for m in spec.levels:
            check_distinct(lv[m], f"roots at level {m}")
        bs = twist or spec.twist()
        beta = spec.beta if beta is None else beta

    def make(m: int, upper):
        if m == spec.n - 1:
            return lambda u: bs[m] * (RatFunc(ONE) if symbolic else 1)

        def value(u):
            if symbolic and not isinstance(u, RatFunc):
                u = RatFunc(Poly.var(u) if isinstance(u, VarId) else u)
            first = bs[m]
            for s in lv[m + 1]:
                first = first / _ominus(s, u, beta)
            ratio = 1
            for s in lv[m]:
                ratio = ratio * _ominus(u, s, beta)
            for s in lv[m + 1]:
                ratio = ratio / _ominus(u, s, beta)
            return first + ratio * upper(u)

        return value

    out = []
    fn = None
    for m in range(spec.n - 1, -1, -1):
        fn = make(m, fn)
        out.append(EigenData(m, _formula(spec, m), fn))
    return out


def top_eigenvalue(spec: BetheSpec, roots: dict | None = None, **kw) -> EigenData:
    return eigenvalue_chain(spec, roots, **kw)[-1]


def residues(spec: BetheSpec, roots: dict, twist=None) -> list[complex]:
    """Residues of ``L^(0)`` at each ``sigma^(1)_a``, from the two pole terms."""
    chain = eigenvalue_chain(spec, roots, twist)
    upper = chain[-2]
    beta = spec.beta
    bs = twist or spec.twist()
    sig = list(roots[1])
    out = []
    for a, s in enumerate(sig):
        others = [c for i, c in enumerate(sig) if i != a]
        first = -bs[0] * (1 + beta * s) ** len(sig)
        for c in others:
            first /= c - s
        second = upper(s)
        for t in spec.t:
            second *= _ominus(s, t, beta)
        for c in sig:
            second *= 1 + beta * c
        for c in others:
            second /= s - c
        out.append(first + second)
    return out


def symbolic_values(spec: BetheSpec, roots: dict) -> dict:
    """Variable bindings for evaluating symbolic expressions at numeric data."""
    vals = {BETA: spec.beta, U: 0}
    for i, t in enumerate(spec.t, 1):
        vals[root_var(0, i)] = t
    for i, bi in enumerate(spec.twist()):
        vals[b_var(i)] = bi
    for m in spec.levels:
        for a, r in enumerate(roots[m], 1):
            vals[root_var(m, a)] = r
    return vals
