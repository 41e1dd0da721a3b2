"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(var_key, exponent)`` pairs sorted by key, with
no zero exponents; ``()`` is the unit monomial.  Coefficients are ``int``
when integral and :class:`fractions.Fraction` otherwise.

The monomial order is lexicographic with the *smallest* variable key being
the most significant (so ``x1 > x2 > ...``).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from ..errors import NotDivisible
from .variables import VarId

Monomial = tuple  # tuple[tuple[int, int], ...]

_SENTINEL = ((1 << 62, 0),)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _norm(Fraction(a) / b)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items()))


def mono_div(a: Monomial, b: Monomial):
    """Return ``a / b`` or ``None`` when ``b`` does not divide ``a``."""
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        have = d.get(k, 0)
        if have < e:
            return None
        if have == e:
            del d[k]
        else:
            d[k] = have - e
    return tuple(sorted(d.items()))


def lex_key(m: Monomial):
    """Sort key: larger in lex order <=> larger key."""
    return tuple((-k, e) for k, e in m)


def _heap_key(m: Monomial):
    # reversed lex order so heapq (a min-heap) pops the lex-largest first
    return tuple((k, -e) for k, e in m) + _SENTINEL


class Poly:
    """Immutable sparse polynomial."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        # trusted constructor: callers pass normalized, zero-free terms
        self.terms = dict(terms) if terms else {}
        self._hash = None

    # ----- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        c = _norm(c)
        if c == 0:
            return ZERO
        return cls({(): c})

    @classmethod
    def var(cls, v: VarId, exp: int = 1) -> "Poly":
        if exp == 0:
            return ONE
        return cls({((v.key, exp),): 1})

    @classmethod
    def from_terms(cls, items: Iterable) -> "Poly":
        """Build from ``(coeff, {VarId: exp})`` pairs, merging duplicates."""
        acc: dict = {}
        for c, exps in items:
            m = tuple(sorted((v.key, e) for v, e in exps.items() if e))
            acc[m] = acc.get(m, 0) + c
        return cls({m: _norm(c) for m, c in acc.items() if c != 0})

    @staticmethod
    def coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, VarId):
            return Poly.var(other)
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return Poly.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    # ----- inspection ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self):
        return self.terms.get((), 0)

    def __len__(self):
        return len(self.terms)

    def variables(self) -> set[VarId]:
        keys = {k for m in self.terms for k, _ in m}
        return {VarId.from_key(k) for k in keys}

    def degree(self, v: VarId) -> int:
        key = v.key
        best = 0
        for m in self.terms:
            for k, e in m:
                if k == key and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def is_homogeneous(self, among: Iterable[VarId] | None = None) -> bool:
        keys = None if among is None else {v.key for v in among}
        degs = {sum(e for k, e in m if keys is None or k in keys) for m in self.terms}
        return len(degs) <= 1

    def leading_term(self):
        """``(monomial, coeff)`` of the lex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=lex_key)
        return m, self.terms[m]

    def coefficient(self, exps: Mapping[VarId, int]):
        m = tuple(sorted((v.key, e) for v, e in exps.items() if e))
        return self.terms.get(m, 0)

    def coeffs_in(self, v: VarId) -> dict[int, "Poly"]:
        """Split as ``sum_d coeff_d * v^d``."""
        key = v.key
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            d = 0
            rest = []
            for k, e in m:
                if k == key:
                    d = e
                else:
                    rest.append((k, e))
            out.setdefault(d, {})[tuple(rest)] = c
        return {d: Poly(t) for d, t in out.items()}

    # ----- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if len(self.terms) < len(other.terms):
            big, small = other, self
        else:
            big, small = self, other
        acc = dict(big.terms)
        for m, c in small.terms.items():
            s = acc.get(m, 0) + c
            if s == 0:
                acc.pop(m, None)
            else:
                acc[m] = _norm(s)
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ZERO
                return Poly({m: _norm(c * other) for m, c in self.terms.items()})
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if not mb:
                return Poly({m: _norm(c * cb) for m, c in a.items()})
            return Poly({mono_mul(m, mb): _norm(c * cb) for m, c in a.items()})
        acc: dict = {}
        get = acc.get
        for mb, cb in b.items():
            db = dict(mb)
            for ma, ca in a.items():
                if not ma:
                    m = mb
                elif not mb:
                    m = ma
                else:
                    d = dict(ma)
                    for k, e in db.items():
                        d[k] = d.get(k, 0) + e
                    m = tuple(sorted(d.items()))
                acc[m] = get(m, 0) + ca * cb
        return Poly({m: _norm(c) for m, c in acc.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be non-negative integers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * _norm(c)

    def exact_div(self, d: "Poly") -> "Poly":
        return poly_exact_div(self, d)

    # ----- structural transforms -----------------------------------------
    def rename(self, mapping: Mapping[VarId, VarId]) -> "Poly":
        """Rename variables injectively on the variables present."""
        km = {a.key: b.key for a, b in mapping.items()}
        acc: dict = {}
        for m, c in self.terms.items():
            d: dict = {}
            for k, e in m:
                k2 = km.get(k, k)
                d[k2] = d.get(k2, 0) + e
            nm = tuple(sorted(d.items()))
            s = acc.get(nm, 0) + c
            acc[nm] = s
        return Poly({m: _norm(c) for m, c in acc.items() if c != 0})

    def swap(self, a: VarId, b: VarId) -> "Poly":
        return self.rename({a: b, b: a})

    def diff(self, v: VarId) -> "Poly":
        key = v.key
        acc: dict = {}
        for m, c in self.terms.items():
            for i, (k, e) in enumerate(m):
                if k == key:
                    nm = m[:i] + (((k, e - 1),) if e > 1 else ()) + m[i + 1:]
                    acc[nm] = acc.get(nm, 0) + c * e
                    break
        return Poly({m: _norm(c) for m, c in acc.items() if c != 0})

    def subs(self, bindings: Mapping[VarId, "Poly"]) -> "Poly":
        """Substitute polynomials for variables (all bindings applied at once)."""
        if not bindings:
            return self
        bk = {v.key: Poly.coerce(p) for v, p in bindings.items()}
        powers: dict = {}
        acc = ZERO
        for m, c in self.terms.items():
            kept = []
            factor = None
            for k, e in m:
                if k in bk:
                    pw = powers.get((k, e))
                    if pw is None:
                        pw = bk[k] ** e
                        powers[(k, e)] = pw
                    factor = pw if factor is None else factor * pw
                else:
                    kept.append((k, e))
            term = Poly({tuple(kept): c})
            acc = acc + (term if factor is None else term * factor)
        return acc

    def evaluate(self, values: Mapping[VarId, complex]):
        """Numeric evaluation; every variable must be bound."""
        vals = {v.key: x for v, x in values.items()}
        total = 0
        for m, c in self.terms.items():
            term = c if type(c) is int else float(c)
            for k, e in m:
                try:
                    term = term * vals[k] ** e
                except KeyError:
                    raise KeyError(f"no value for {VarId.from_key(k).name}") from None
            total += term
        return total

    # ----- comparison / hashing ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # ----- printing ------------------------------------------------------
    def sorted_terms(self):
        """Terms in canonical (descending lex) order."""
        return sorted(self.terms.items(), key=lambda mc: lex_key(mc[0]), reverse=True)

    def __str__(self):
        return format_poly(self, "text")

    def __repr__(self):
        return f"Poly({self})"

    def latex(self) -> str:
        return format_poly(self, "latex")


def _fmt_coeff(c, style):
    if isinstance(c, Fraction):
        if style == "latex":
            return rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
        return f"{abs(c.numerator)}/{c.denominator}"
    return str(abs(c))


def format_poly(p: Poly, style: str = "text") -> str:
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        factors = []
        for k, e in m:
            v = VarId.from_key(k)
            if style == "latex":
                name = v.latex()
                factors.append(name if e == 1 else f"{name}^{{{e}}}")
            else:
                name = v.text()
                factors.append(name if e == 1 else f"{name}^{e}")
        mag = _fmt_coeff(c, style)
        sep = " " if style == "latex" else "*"
        if factors:
            body = sep.join(factors)
            if mag != "1":
                body = mag + sep + body
        else:
            body = mag
        pieces.append((c < 0, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


ZERO = Poly()
ONE = Poly({(): 1})


def poly_exact_div(p: Poly, d: Poly) -> Poly:
    """Exact quotient ``q`` with ``p == q * d``; raises :class:`NotDivisible`."""
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.terms:
        return ZERO
    if len(d.terms) == 1:
        (md, cd), = d.terms.items()
        out = {}
        for m, c in p.terms.items():
            qm = mono_div(m, md)
            if qm is None:
                raise NotDivisible(f"{p} is not divisible by {d}")
            out[qm] = _div(c, cd)
        return Poly(out)
    ltm, ltc = d.leading_term()
    dterms = [(m, c) for m, c in d.terms.items() if m != ltm]
    rem = dict(p.terms)
    heap = [(_heap_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        while True:
            _, m = heapq.heappop(heap)
            if m in rem:
                break
        c = rem.pop(m)
        qm = mono_div(m, ltm)
        if qm is None:
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = _div(c, ltc)
        quot[qm] = qc
        for dm, dc in dterms:
            tm = mono_mul(qm, dm)
            s = rem.get(tm, 0) - qc * dc
            if s == 0:
                rem.pop(tm, None)
            else:
                if tm not in rem:
                    heapq.heappush(heap, (_heap_key(tm), tm))
                rem[tm] = _norm(s)
    return Poly(quot)


def divides(d: Poly, p: Poly) -> bool:
    try:
        poly_exact_div(p, d)
    except NotDivisible:
        return False
    return True


def var(v: VarId) -> Poly:
    return Poly.var(v)


def prod(factors: Iterable) -> Poly:
    out = ONE
    for f in factors:
        out = out * f
    return out
