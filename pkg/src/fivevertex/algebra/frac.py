"""Fractions whose denominators are products of ``(1 + beta*v)`` factors.

Every denominator the five-vertex model produces has that shape, so a
structured representation avoids general multivariate gcds: a ``Frac``
stores a :class:`Poly` numerator and a map ``v -> e`` meaning
``prod_v (1 + beta*v)^e``.  The normal form cancels every factor that
divides the numerator, which makes equality a plain structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from ..errors import DenominatorCollapse, DenominatorShapeError, NotDivisible
from .poly import ONE, ZERO, Poly, _norm, poly_exact_div
from .variables import BETA, VarId

_BETA_KEY = BETA.key


@lru_cache(maxsize=None)
def factor_poly(key: int, exp: int = 1) -> Poly:
    """``(1 + beta*v)^exp`` for the variable with the given key."""
    if exp == 1:
        return Poly({(): 1, tuple(sorted(((_BETA_KEY, 1), (key, 1)))): 1})
    return factor_poly(key, 1) ** exp


_P = (1 << 61) - 1


def _point(key: int) -> int:
    return (key * 0x9E3779B97F4A7C15 + 0x2545F4914F6CDD1D) % _P or 7


def _modular_value(p: Poly, assign: dict) -> int:
    total = 0
    for m, c in p.terms.items():
        if type(c) is int:
            term = c % _P
        else:
            term = c.numerator * pow(c.denominator, -1, _P) % _P
        for k, e in m:
            val = assign.get(k)
            if val is None:
                val = assign[k] = _point(k)
            term = term * pow(val, e, _P) % _P
        total += term
    return total % _P


def _divisible_by_factor(p: Poly, key: int) -> bool:
    """Cheap necessary condition for ``(1 + beta*v) | p``.

    Divisibility means ``p`` vanishes at ``v = -1/beta``; evaluating that
    modulo a large prime at a fixed point can only give a false positive,
    which the subsequent exact division catches.
    """
    if not p.terms:
        return True
    beta_val = _point(_BETA_KEY)
    assign = {_BETA_KEY: beta_val, key: (-pow(beta_val, -1, _P)) % _P}
    return _modular_value(p, assign) == 0


def _divide_out(num: Poly, key: int):
    """``num / (1 + beta*v)`` or ``None``."""
    if not _divisible_by_factor(num, key):
        return None
    try:
        return poly_exact_div(num, factor_poly(key))
    except NotDivisible:
        return None


def _reduce(num: Poly, den: dict) -> tuple[Poly, dict]:
    if not num.terms:
        return ZERO, {}
    for key in list(den):
        e = den[key]
        while e:
            q = _divide_out(num, key)
            if q is None:
                break
            num = q
            e -= 1
        if e:
            den[key] = e
        else:
            del den[key]
    return num, den


class Frac:
    """Immutable ``num / prod(1 + beta*v)^e`` in normal form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=ZERO, den: Mapping | Iterable | None = None, *, _normal=False):
        num = Poly.coerce(num)
        if den is None:
            d = {}
        elif isinstance(den, Mapping):
            d = {(v.key if isinstance(v, VarId) else v): e for v, e in den.items() if e}
        else:
            d = {(v.key if isinstance(v, VarId) else v): e for v, e in den if e}
        if any(e < 0 for e in d.values()):
            raise ValueError("denominator exponents must be positive")
        if not _normal:
            num, d = _reduce(num, d)
        self.num = num
        self.den = tuple(sorted(d.items()))
        self._hash = None

    @classmethod
    def coerce(cls, value) -> "Frac":
        if isinstance(value, Frac):
            return value
        return cls(Poly.coerce(value), _normal=True)

    # ----- inspection ---------------------------------------------------
    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> Poly:
        if self.den:
            raise DenominatorShapeError(f"{self} is not a polynomial")
        return self.num

    def simplify(self):
        """Return a :class:`Poly` when the denominator is trivial."""
        return self.num if not self.den else self

    def den_map(self) -> dict[VarId, int]:
        return {VarId.from_key(k): e for k, e in self.den}

    def den_poly(self) -> Poly:
        out = ONE
        for k, e in self.den:
            out = out * factor_poly(k, e)
        return out

    def __bool__(self):
        return bool(self.num.terms)

    def is_zero(self) -> bool:
        return not self.num.terms

    def variables(self) -> set[VarId]:
        vs = self.num.variables()
        if self.den:
            vs |= {VarId.from_key(k) for k, _ in self.den} | {BETA}
        return vs

    # ----- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            other = Frac.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            if not self.den:
                return Frac(self.num + other.num, _normal=True)
            return Frac(self.num + other.num, dict(self.den))
        da, db = dict(self.den), dict(other.den)
        common = dict(da)
        for k, e in db.items():
            if e > common.get(k, 0):
                common[k] = e
        na = self.num
        for k, e in common.items():
            if e > da.get(k, 0):
                na = na * factor_poly(k, e - da.get(k, 0))
        nb = other.num
        for k, e in common.items():
            if e > db.get(k, 0):
                nb = nb * factor_poly(k, e - db.get(k, 0))
        return Frac(na + nb, common)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den, _normal=True)

    def __sub__(self, other):
        try:
            other = Frac.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Frac.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Frac.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return FZERO
        num = self.num * other.num
        if not other.den:
            if not self.den:
                return Frac(num, _normal=True)
            if other.num.is_constant():
                return Frac(num, self.den, _normal=True)
            return Frac(num, dict(self.den))
        if not self.den and self.num.is_constant():
            return Frac(num, other.den, _normal=True)
        d = dict(self.den)
        for k, e in other.den:
            d[k] = d.get(k, 0) + e
        return Frac(num, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        return Frac(self.num ** n, {k: e * n for k, e in self.den}, _normal=True)

    def inverse(self) -> "Frac":
        """Reciprocal; the numerator must itself be ``c * prod(1+beta*w)^f``."""
        if not self.num.terms:
            raise DenominatorCollapse("reciprocal of zero")
        rest = self.num
        found: dict = {}
        keys = sorted(k for k in {k for m in rest.terms for k, _ in m} if k != _BETA_KEY)
        for k in keys:
            while True:
                q = _divide_out(rest, k)
                if q is None:
                    break
                rest = q
                found[k] = found.get(k, 0) + 1
        if not rest.is_constant():
            raise DenominatorShapeError(
                f"1/({self.num}) is not of the form prod(1+beta*v)^-e"
            )
        c = rest.constant_term()
        new_num = Poly.const(Fraction(1) / Fraction(c))
        for k, e in self.den:
            new_num = new_num * factor_poly(k, e)
        return Frac(new_num, found, _normal=True)

    def __truediv__(self, other):
        try:
            other = Frac.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Frac.coerce(other) * self.inverse()

    # ----- transforms ---------------------------------------------------
    def rename(self, mapping: Mapping[VarId, VarId]) -> "Frac":
        km = {a.key: b.key for a, b in mapping.items()}
        d: dict = {}
        for k, e in self.den:
            k2 = km.get(k, k)
            d[k2] = d.get(k2, 0) + e
        return Frac(self.num.rename(mapping), d)

    def evaluate(self, values: Mapping[VarId, complex]):
        val = self.num.evaluate(values)
        if self.den:
            bval = values[BETA]
            for k, e in self.den:
                val = val / (1 + bval * values[VarId.from_key(k)]) ** e
        return val

    def diff(self, v: VarId) -> "Frac":
        """Derivative with respect to ``v``; stays inside the Frac shape."""
        out = Frac(self.num.diff(v), self.den)
        for k, e in self.den:
            w = VarId.from_key(k)
            if w == v:
                # d/dv (1+beta v)^-e = -e beta (1+beta v)^-(e+1)
                d = dict(self.den)
                d[k] = e + 1
                out = out - Frac(self.num * Poly.var(BETA) * e, d)
            elif v == BETA:
                d = dict(self.den)
                d[k] = e + 1
                out = out - Frac(self.num * Poly.var(w) * e, d)
        return out

    # ----- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Frac):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (Poly, int, Fraction)):
            return not self.den and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # ----- printing -----------------------------------------------------
    def _den_str(self, style):
        parts = []
        for k, e in self.den:
            v = VarId.from_key(k)
            if style == "latex":
                f = rf"(1+\beta {v.latex()})"
                parts.append(f if e == 1 else f"{f}^{{{e}}}")
            else:
                f = f"(1 + beta*{v.text()})"
                parts.append(f if e == 1 else f"{f}^{e}")
        return parts

    def __str__(self):
        if not self.den:
            return str(self.num)
        parts = self._den_str("text")
        den = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
        return f"({self.num})/{den}"

    def __repr__(self):
        return f"Frac({self})"

    def latex(self) -> str:
        if not self.den:
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{' '.join(self._den_str('latex'))}}}"


FZERO = Frac(ZERO, _normal=True)
FONE = Frac(ONE, _normal=True)


def as_frac(value) -> Frac:
    return Frac.coerce(value)


def ominus(a, b) -> Frac:
    """``a ⊖ b = (a - b) / (1 + beta*b)``.

    ``b`` may be a variable or any expression whose ``1 + beta*b`` has the
    structured shape (for instance ``⊖z``).
    """
    if isinstance(b, VarId):
        return Frac(Poly.coerce(a) - Poly.var(b), {b: 1}) if not isinstance(a, Frac) else (
            (a - Frac.coerce(b)) * Frac(ONE, {b: 1}, _normal=True))
    a, b = Frac.coerce(a), Frac.coerce(b)
    return (a - b) * (FONE + Frac.coerce(Poly.var(BETA)) * b).inverse()


def oplus(a, b) -> Frac:
    """Formal group law ``a + b + beta*a*b``."""
    a, b = Frac.coerce(a), Frac.coerce(b)
    return a + b + Frac.coerce(Poly.var(BETA)) * a * b


def substitute(expr, bindings: Mapping[VarId, object]) -> Frac:
    """Substitute Poly/Frac/number values for variables, all at once.

    Denominator factors ``1 + beta*v`` whose image is not itself of the
    structured shape raise :class:`DenominatorShapeError`; an image that is
    identically zero raises :class:`DenominatorCollapse`.
    """
    f = Frac.coerce(expr)
    if not bindings:
        return f
    fb = {v.key: Frac.coerce(val) for v, val in bindings.items()}
    if all(b.is_poly() for b in fb.values()):
        num = Frac(f.num.subs({VarId.from_key(k): b.num for k, b in fb.items()}), _normal=True)
    else:
        num = _subs_frac(f.num, fb)
    if not f.den:
        return num if num.den else Frac(num.num, _normal=True)
    beta_img = fb.get(_BETA_KEY)
    out = num
    for k, e in f.den:
        if k not in fb and beta_img is None:
            out = out * Frac(ONE, {k: e}, _normal=True)
            continue
        v_img = fb.get(k, Frac.coerce(VarId.from_key(k)))
        b_img = beta_img if beta_img is not None else Frac.coerce(BETA)
        image = FONE + b_img * v_img
        if image.is_zero():
            raise DenominatorCollapse(f"1 + beta*{VarId.from_key(k).text()} becomes zero")
        out = out * image.inverse() ** e
    return out


def _subs_frac(p: Poly, fb: dict) -> Frac:
    powers: dict = {}
    acc = FZERO
    for m, c in p.terms.items():
        kept = []
        factor = None
        for k, e in m:
            if k in fb:
                pw = powers.get((k, e))
                if pw is None:
                    pw = fb[k] ** e
                    powers[(k, e)] = pw
                factor = pw if factor is None else factor * pw
            else:
                kept.append((k, e))
        term = Frac(Poly({tuple(kept): c}), _normal=True)
        acc = acc + (term if factor is None else term * factor)
    return acc


def poly_arith(a, b, op: str) -> Frac:
    a, b = Frac.coerce(a), Frac.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def substitute_ominus(p: Poly, pairs) -> Frac:
    """Replace each ``src`` by ``⊖dst = -dst / (1 + beta*dst)`` for ``(src, dst)`` pairs.

    Equivalent to :func:`substitute` with Frac bindings, but clears the
    denominators variable by variable so only one normalization is needed.
    """
    pairs = [(s.key, d.key) for s, d in pairs]
    top = {s: 0 for s, _ in pairs}
    for m in p.terms:
        for k, e in m:
            if k in top and e > top[k]:
                top[k] = e
    src_to_dst = dict(pairs)
    factor_powers: dict = {}
    acc = ZERO
    for m, c in p.terms.items():
        kept = []
        moved = {}
        for k, e in m:
            if k in src_to_dst:
                moved[k] = e
            else:
                kept.append((k, e))
        term = Poly({tuple(kept): c})
        for s, d in src_to_dst.items():
            e = moved.get(s, 0)
            fill = top[s] - e
            if e:
                term = term * Poly({((d, e),): -1 if e % 2 else 1})
            if fill:
                fp = factor_powers.get((d, fill))
                if fp is None:
                    fp = factor_poly(d, fill)
                    factor_powers[(d, fill)] = fp
                term = term * fp
        acc = acc + term
    den: dict = {}
    for s, d in src_to_dst.items():
        if top[s]:
            den[d] = den.get(d, 0) + top[s]
    return Frac(acc, den)


def frac_sum(terms) -> Frac:
    """Sum of many fractions with a single normalization at the end.

    Items are Fracs or unnormalized ``(num, {key: exp})`` pairs.
    """
    items = []
    for t in terms:
        if isinstance(t, tuple):
            items.append((t[0], dict(t[1])))
        else:
            t = Frac.coerce(t)
            items.append((t.num, dict(t.den)))
    common: dict = {}
    for _, den in items:
        for k, e in den.items():
            if e > common.get(k, 0):
                common[k] = e
    acc: dict = {}
    for num, have in items:
        if not num.terms:
            continue
        for k, e in common.items():
            if e > have.get(k, 0):
                num = num * factor_poly(k, e - have.get(k, 0))
        for m, c in num.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Frac(Poly({m: _norm(c) for m, c in acc.items() if c != 0}), common)
