"""Elementary symmetric polynomials and rewriting into the elementary basis."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Sequence

from ..errors import NotSymmetric
from .poly import ONE, ZERO, Poly, _norm
from .variables import VarId


def elementary_symmetric(variables: Sequence, l: int) -> Poly:
    """``e_l`` of the given variables (or polynomials); 0 outside ``0..len``."""
    n = len(variables)
    if l < 0 or l > n:
        return ZERO
    if l == 0:
        return ONE
    if all(isinstance(v, VarId) for v in variables):
        return _e_monomial(tuple(v.key for v in variables), l)
    # generating function prod(1 + v*s), truncated at degree l
    row = [ONE] + [ZERO] * l
    for v in variables:
        v = Poly.coerce(v)
        for j in range(l, 0, -1):
            row[j] = row[j] + row[j - 1] * v
    return row[l]


def _e_monomial(keys: tuple, l: int) -> Poly:
    terms = {}
    for combo in combinations(sorted(keys), l):
        terms[tuple((k, 1) for k in combo)] = 1
    return Poly(terms)


def elementary_all(variables: Sequence) -> list[Poly]:
    """``[e_0, e_1, ..., e_n]``."""
    return [elementary_symmetric(variables, l) for l in range(len(variables) + 1)]


def complete_homogeneous(variables: Sequence[VarId], l: int) -> Poly:
    if l < 0:
        return ZERO
    acc: dict = {}
    for combo in combinations_with_replacement(sorted(v.key for v in variables), l):
        m: dict = {}
        for k in combo:
            m[k] = m.get(k, 0) + 1
        acc[tuple(sorted(m.items()))] = 1
    return Poly(acc)


def elem_names(level: int, n: int) -> list[VarId]:
    """Placeholder variables ``E_1..E_n`` standing for ``e_l`` of some alphabet."""
    return [VarId("elem", level, l) for l in range(1, n + 1)]


def is_symmetric(p: Poly, variables: Sequence[VarId]) -> bool:
    return all(p.swap(a, b) == p for a, b in zip(variables, variables[1:]))


def _split(p: Poly, keys: Sequence[int]) -> dict:
    """Map exponent vector over ``keys`` -> coefficient Poly in the rest."""
    pos = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    out: dict = {}
    for m, c in p.terms.items():
        vec = [0] * n
        rest = []
        for k, e in m:
            i = pos.get(k)
            if i is None:
                rest.append((k, e))
            else:
                vec[i] = e
        vec = tuple(vec)
        bucket = out.setdefault(vec, {})
        bucket[tuple(rest)] = c
    return {v: Poly(t) for v, t in out.items()}


def _vec_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for va, ca in a.items():
        for vb, cb in b.items():
            v = tuple(x + y for x, y in zip(va, vb))
            out[v] = out.get(v, 0) + ca * cb
    return {v: _norm(c) for v, c in out.items() if c != 0}


def rewrite_in_elementary(p: Poly, variables: Sequence[VarId], e_names: Sequence[VarId]) -> Poly:
    """Express a polynomial symmetric in ``variables`` through ``e_names``.

    ``e_names[l-1]`` stands for ``e_l(variables)``; other variables are left
    untouched.  Uses leading-term reduction in the lex order of
    ``variables`` as listed.
    """
    n = len(variables)
    if len(e_names) != n:
        raise ValueError("need one elementary name per variable")
    if not is_symmetric(p, variables):
        raise NotSymmetric(f"{p} is not symmetric in {[v.text() for v in variables]}")
    keys = [v.key for v in variables]
    rem = _split(p, keys)
    # exponent-vector expansions of e_1..e_n
    e_vec = []
    for l in range(1, n + 1):
        d = {}
        for combo in combinations(range(n), l):
            d[tuple(1 if i in combo else 0 for i in range(n))] = 1
        e_vec.append(d)
    unit = tuple([0] * n)
    prod_cache: dict = {unit: {unit: 1}}

    def e_product(a: tuple) -> dict:
        # prod_l e_l^(a_l - a_{l+1}); cached by the partition
        got = prod_cache.get(a)
        if got is None:
            l = max(i for i in range(n) if a[i])
            smaller = list(a)
            for i in range(l + 1):
                smaller[i] -= 1
            got = _vec_mul(e_product(tuple(smaller)), e_vec[l])
            prod_cache[a] = got
        return got

    result = ZERO
    while rem:
        lead = max(rem)
        coeff = rem[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise NotSymmetric("leading exponent is not a partition")
        mono = {}
        for l in range(n):
            d = lead[l] - (lead[l + 1] if l + 1 < n else 0)
            if d:
                mono[e_names[l]] = d
        result = result + coeff * Poly.from_terms([(1, mono)])
        for vec, c in e_product(lead).items():
            cur = rem.get(vec)
            new = (cur if cur is not None else ZERO) - coeff * c
            if new:
                rem[vec] = new
            else:
                rem.pop(vec, None)
    return result


def expand_elementary(p: Poly, variables: Sequence, e_names: Sequence[VarId]) -> Poly:
    """Substitute ``e_names[l-1] -> e_l(variables)``."""
    return p.subs({name: elementary_symmetric(variables, l + 1) for l, name in enumerate(e_names)})
