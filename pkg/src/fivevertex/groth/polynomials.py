"""Double beta-Grothendieck polynomials and their dual and biaxial variants.

Polynomials are stored in the ``x`` alphabet (first argument) and the
``z`` alphabet (second argument).  When the second argument is ``⊖t``
the ``z_j`` are the atoms ``⊖t_j``, which keeps everything polynomial:
``x ⊖ t = x + z + beta x z``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field

from ..algebra.frac import Frac, frac_sum, substitute_ominus
from ..algebra.poly import ONE, Poly, poly_exact_div
from ..algebra.variables import BETA, MIDDLE, Alphabet, VarId, X, Z
from ..errors import IdentityFailed, NotDivisible, NotInModule, SizeMismatch
from .divdiff import apply_perm, beta_divdiff
from .perm import Perm, all_perms

_BETA = Poly.var(BETA)


@dataclass(frozen=True)
class GrothPoly:
    perm: Perm
    n_vars: int
    value: Poly = field(compare=False)
    flavor: str = "standard"
    v: Perm | None = None

    def specialize(self, beta_value) -> Poly:
        return specialize_family(self, beta_value)


def ominus_atom(a: VarId, z: VarId) -> Poly:
    """``a ⊖ t`` written with the atom ``z = ⊖t``: ``a + z + beta a z``."""
    pa, pz = Poly.var(a), Poly.var(z)
    return pa + pz + _BETA * pa * pz


def top_groth(N: int, first: Alphabet = X, second: Alphabet = Z) -> Poly:
    """``prod_{i+j<=N} (x_i + y_j + beta x_i y_j)``."""
    out = ONE
    for i in range(1, N):
        for j in range(1, N - i + 1):
            out = out * ominus_atom(first(i), second(j))
    return out


class _Cache:
    """Insert-once memo table; concurrent inserts of one key agree."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()


_cache = _Cache()


def _one_sided(w: Perm, variant: str) -> Poly:
    key = (w.N, variant, w.oneline)
    got = _cache.get(key)
    if got is not None:
        return got
    N = w.N
    omega = Perm.longest(N)
    if w == omega:
        value = top_groth(N)
    else:
        c = (w.inverse() * omega).reduced_word()[0]
        value = beta_divdiff(_one_sided(w * Perm.simple(c, N), variant), c, variant)
    return _cache.put(key, value)


def _check_size(w: Perm, N: int | None):
    if N is not None and w.N != N:
        raise SizeMismatch(f"{w} is not in S_{N}")


def groth(w: Perm, N: int | None = None) -> GrothPoly:
    """Standard double beta-Grothendieck polynomial ``G_w(x; z)``."""
    _check_size(w, N)
    return GrothPoly(w, w.N, _one_sided(w, "plain"))


def groth_value(w: Perm) -> Poly:
    return _one_sided(w, "plain")


def dual_groth(w: Perm, N: int | None = None) -> GrothPoly:
    _check_size(w, N)
    return GrothPoly(w, w.N, _one_sided(w, "bar"), "dual")


def biaxial_groth(v: Perm, w: Perm) -> GrothPoly:
    """``G_{v,w}``: dbar steps acting on the second alphabet."""
    if v.N != w.N:
        raise SizeMismatch("v and w must lie in the same S_N")
    key = (w.N, "biaxial", v.oneline, w.oneline)
    got = _cache.get(key)
    if got is None:
        if v.is_identity():
            got = groth_value(w)
        else:
            a = v.reduced_word()[-1]
            prev = biaxial_groth(v * Perm.simple(a, v.N), w).value
            got = beta_divdiff(prev, a, "bar", Z)
        got = _cache.put(key, got)
    return GrothPoly(w, w.N, got, "biaxial", v)


def groth_variants(w: Perm, v: Perm | None = None, flavor: str = "standard") -> GrothPoly:
    if flavor == "standard":
        return groth(w)
    if flavor == "dual":
        return dual_groth(w)
    if flavor == "biaxial":
        if v is None:
            raise ValueError("biaxial flavor needs v")
        return biaxial_groth(v, w)
    raise ValueError(f"unknown flavor {flavor!r}")


def specialize_family(g, beta_value) -> Poly:
    p = g.value if isinstance(g, GrothPoly) else g
    return p.subs({BETA: Poly.const(beta_value)})


def clear_cache():
    _cache.clear()


# ----- alphabet helpers -------------------------------------------------------

def rename_alphabet(p: Poly, src: Alphabet, dst: Alphabet, n: int) -> Poly:
    return p.rename({src(i): dst(i) for i in range(1, n + 1)})


def swap_alphabets(p: Poly, a: Alphabet, b: Alphabet, n: int) -> Poly:
    mapping = {}
    for i in range(1, n + 1):
        mapping[a(i)] = b(i)
        mapping[b(i)] = a(i)
    return p.rename(mapping)


def with_ominus_second(p: Poly, n: int, second: Alphabet = Z, middle: Alphabet = MIDDLE) -> Frac:
    """``G(x; ⊖m)``: replace ``z_j`` by ``⊖m_j``."""
    return substitute_ominus(p, [(second(j), middle(j)) for j in range(1, n + 1)])


# ----- Cauchy identity and interpolation --------------------------------------

def cauchy_check(w: Perm, N: int | None = None, middle: Alphabet = MIDDLE) -> dict:
    """Verify ``G_w(x;⊖t) = sum_v G_v(x;⊖m) dbar_v G_w(m;⊖t)`` exactly.

    Returns a certificate with the per-``v`` summands; raises
    :class:`IdentityFailed` carrying the difference when the sum disagrees.
    """
    _check_size(w, N)
    n = w.N
    target = groth_value(w)
    g_mid = rename_alphabet(target, X, middle, n)
    summands = {}
    for v in all_perms(n):
        coeff = apply_perm(g_mid, v, "bar", middle)
        if coeff:
            g = with_ominus_second(groth_value(v), n, Z, middle)
            summands[v] = (g.num * coeff, g.den)
    total = frac_sum(summands.values())
    diff = total - target
    if diff:
        raise IdentityFailed(f"Cauchy identity fails for w={w}", witness=diff)
    # summands are left as unnormalized (numerator, denominator) pairs
    return {"perm": w, "summands": summands, "status": "pass"}


def check_in_module(F: Poly, n: int, alphabet: Alphabet = X):
    """Raise :class:`NotInModule` unless every exponent of ``x_j`` is ``<= n - j``."""
    for m in F.terms:
        for k, e in m:
            v = VarId.from_key(k)
            if v.family == alphabet.family and (alphabet.level is None or v.level == alphabet.level):
                j = v.level if alphabet.level is None else v.pos
                if e > n - j:
                    raise NotInModule(f"{v.text()}^{e} exceeds the bound {n - j}")


def interpolate(F: Poly, n: int, middle: Alphabet = MIDDLE) -> dict:
    """Coefficients ``{v: dbar_v F(m)}`` with ``F = sum_v G_v(x;⊖m) * coeff_v``."""
    check_in_module(F, n)
    F_mid = rename_alphabet(F, X, middle, n)
    out = {}
    for v in all_perms(n):
        coeff = apply_perm(F_mid, v, "bar", middle)
        out[v] = coeff
    return out


def interpolation_sum(coeffs: dict, n: int, middle: Alphabet = MIDDLE) -> Frac:
    parts = []
    for v, c in coeffs.items():
        if c:
            g = with_ominus_second(groth_value(v), n, Z, middle)
            parts.append((g.num * c, g.den))
    return frac_sum(parts)


# ----- display ----------------------------------------------------------------

def split_ominus_factors(p: Poly, first_vars, n_second: int, second: Alphabet = Z):
    """Pull out factors ``a + z_j + beta a z_j``; returns ``(pairs, cofactor)``."""
    pairs = []
    rest = p
    for a in first_vars:
        for j in range(1, n_second + 1):
            f = ominus_atom(a, second(j))
            while rest and not rest.is_constant():
                try:
                    rest = poly_exact_div(rest, f)
                except NotDivisible:
                    break
                pairs.append((a, j))
    return pairs, rest


def atom_form(p: Poly, first_vars, n_second: int, second: Alphabet = Z,
              max_support: int = 5, max_candidates: int = 24, max_trials: int = 2000):
    """Write ``p`` as a short sum of products of atoms ``a ⊖ t_j``.

    Returns ``[(c, k, ((a, j), ...)), ...]`` meaning
    ``sum c * beta^k * prod (a ⊖ t_j)``, or ``None`` when no representation
    with at most ``max_support`` terms turns up within ``max_trials``
    candidate subsets.  Atoms have degree 1 once
    ``beta`` is given degree -1, so ``k`` is fixed by the number of atoms.
    Among the smallest representations the lexicographically first set of
    atom products wins.
    """
    from itertools import combinations

    from ..algebra.linalg import solve_rational

    bkey = BETA.key
    grades = set()
    top = 0
    for m in p.terms:
        plain = sum(e for k, e in m if k != bkey)
        grades.add(plain - sum(e for k, e in m if k == bkey))
        top = max(top, plain)
    if len(grades) != 1:
        return None
    d = grades.pop()
    present = p.variables()
    atoms = [(a, j) for a in first_vars for j in range(1, n_second + 1)
             if a in present and second(j) in present]
    shapes = [()] if d == 0 else []
    for size in range(max(d, 1), top + 1):
        shapes.extend(combinations(atoms, size))
        if len(shapes) > max_candidates:
            return None
    values = {}
    for shape in shapes:
        v = _BETA ** (len(shape) - d)
        for a, j in shape:
            v = v * ominus_atom(a, second(j))
        values[shape] = v
    support = {shape: set(v.terms) for shape, v in values.items()}
    need = set(p.terms)
    trials = 0
    for size in range(1, max_support + 1):
        for combo in combinations(shapes, size):
            if not need <= set().union(*(support[c] for c in combo)):
                continue
            trials += 1
            if trials > max_trials:
                return None
            sol = solve_rational([values[c] for c in combo], p)
            if sol is not None and all(sol):
                return [(_plain(c), len(shape) - d, shape) for c, shape in zip(sol, combo)]
    return None


def _plain(c):
    return int(c) if c.denominator == 1 else c


def _atom_text(a: VarId, j: int, style: str) -> str:
    if style == "latex":
        return rf"({a.latex()} \ominus t_{{{j}}})"
    return f"({a.text()} ⊖ t{j})"


def _term_text(c, k: int, shape, style: str) -> str:
    latex = style == "latex"
    parts = []
    if k:
        b = r"\beta" if latex else "beta"
        parts.append(b if k == 1 else (f"{b}^{{{k}}}" if latex else f"{b}^{k}"))
    parts.extend(_atom_text(a, j, style) for a, j in shape)
    mag = abs(c)
    if mag != 1 or not parts:
        parts.insert(0, str(mag))
    return (" " if latex else "*").join(parts)


def render_atom_sum(terms, style: str = "text") -> str:
    out = ""
    for idx, (c, k, shape) in enumerate(terms):
        body = _term_text(c, k, shape, style)
        if idx == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


def display(p: Poly, n: int, style: str = "text", atoms: str = "ominus", first: Alphabet = X,
            n_first: int | None = None) -> str:
    """Render a polynomial in ``(x, z)`` atoms.

    ``atoms="z"`` prints the internal variables; ``atoms="ominus"`` factors
    out every ``x_i ⊖ t_j``, writes the cofactor as a short sum of atom
    products when one exists, and otherwise prints leftover ``z_j`` as ``⊖t_j``.
    """
    if atoms == "z":
        return p.latex() if style == "latex" else str(p)
    firsts = [first(i) for i in range(1, (n_first or n) + 1)]
    pairs, rest = split_ominus_factors(p, firsts, n)
    pieces = [_atom_text(a, j, style) for a, j in pairs]
    sep = " " if style == "latex" else "*"
    if rest == ONE and pieces:
        return sep.join(pieces)
    if rest == -ONE and pieces:
        return "-" + sep.join(pieces)
    if rest.is_constant():
        body = rest.latex() if style == "latex" else str(rest)
        return sep.join(pieces + [body]) if pieces else body
    terms = atom_form(rest, firsts, n)
    if terms is not None:
        body = render_atom_sum(terms, style)
        if len(terms) == 1:
            c, k, shape = terms[0]
            lead = "-" if c < 0 else ""
            return lead + sep.join(pieces + [_term_text(c, k, shape, style)])
    else:
        body = rest.latex() if style == "latex" else str(rest)
        for j in range(1, n + 1):
            zj = Z(j)
            if style == "latex":
                body = body.replace(zj.latex(), rf"(\ominus t_{{{j}}})")
            else:
                body = _replace_name(body, zj.text(), f"(⊖t{j})")
    if pieces:
        body = f"({body})"
    return sep.join(pieces + [body])


def _replace_name(text: str, name: str, repl: str) -> str:
    return re.sub(rf"(?<![A-Za-z0-9_]){re.escape(name)}(?![0-9_])", repl, text)
