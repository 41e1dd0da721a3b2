"""beta-divided difference operators.

With ``a = v_i`` and ``b = v_{i+1}`` taken from an alphabet ``v``:

* plain ``d_i f = (f - s_i f) / (a - b)``
* ``dbeta_i f = ((1 + beta b) f - (1 + beta a) s_i f) / (a - b) = (1 + beta a) d_i f - beta f``
* ``dbar_i f = dbeta_i f + beta f = (1 + beta a) d_i f``

The plain operator is computed monomial by monomial with the closed form of
``(a^p b^q - a^q b^p) / (a - b)``, so no polynomial division is needed.
"""

from __future__ import annotations

from typing import Iterable

from ..algebra.frac import factor_poly
from ..algebra.poly import Poly, _norm
from ..algebra.variables import BETA, X, Alphabet
from .perm import Perm

_BETA = Poly.var(BETA)


def ordinary_divdiff(f: Poly, i: int, alphabet: Alphabet = X) -> Poly:
    a, b = alphabet(i).key, alphabet(i + 1).key
    acc: dict = {}
    for m, c in f.terms.items():
        p = q = 0
        rest = []
        for k, e in m:
            if k == a:
                p = e
            elif k == b:
                q = e
            else:
                rest.append((k, e))
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        # a^q b^q * sum_{j=0}^{p-q-1} a^(p-q-1-j) b^j
        d = p - q
        for j in range(d):
            ea, eb = q + d - 1 - j, q + j
            mono = list(rest)
            if ea:
                mono.append((a, ea))
            if eb:
                mono.append((b, eb))
            mono = tuple(sorted(mono))
            acc[mono] = acc.get(mono, 0) + sign * c
    return Poly({m: _norm(c) for m, c in acc.items() if c != 0})


def beta_divdiff(f: Poly, i: int, variant: str = "plain", alphabet: Alphabet = X) -> Poly:
    """``dbeta_i f`` (``variant="plain"``) or ``dbar_i f`` (``variant="bar"``)."""
    d = ordinary_divdiff(f, i, alphabet)
    out = factor_poly(alphabet(i).key) * d
    if variant == "plain":
        return out - _BETA * f
    if variant == "bar":
        return out
    raise ValueError(f"unknown variant {variant!r}")


def apply_word(f: Poly, word: Iterable[int], variant: str = "plain", alphabet: Alphabet = X) -> Poly:
    """``D_{i_1} D_{i_2} ... D_{i_r} f``: the rightmost operator acts first."""
    for i in reversed(tuple(word)):
        f = beta_divdiff(f, i, variant, alphabet)
    return f


def apply_perm(f: Poly, w: Perm, variant: str = "plain", alphabet: Alphabet = X) -> Poly:
    """``D_w f`` along the canonical reduced word of ``w``."""
    return apply_word(f, w.reduced_word(), variant, alphabet)
