"""The complete-flag Bethe state in symmetric-function form.

For ``n = N`` and ``k_i = N - i`` the nested state is built level by level
with every root set kept symbolic.  Each coefficient is symmetric in every
set ``sigma^(s)``; rewriting it through ``e_l(sigma^(s))`` and replacing
those by ``e_l(x_1, ..., x_(N-s))`` must give ``G_w(x; ⊖t)`` at the ket
``|omega w^-1⟩``.
"""

from __future__ import annotations

from ..algebra.frac import FZERO, Frac, factor_poly
from ..algebra.poly import ONE, Poly, poly_exact_div
from ..algebra.symmetric import elem_names, is_symmetric, elementary_symmetric, rewrite_in_elementary
from ..algebra.variables import MIDDLE, X, VarId
from ..errors import ArithmeticFailure, IdentityFailed, SizeGuardError
from ..groth.divdiff import apply_perm
from ..groth.perm import Perm, all_perms
from ..groth.polynomials import display, groth_value, rename_alphabet, with_ominus_second
from ..vertex.monodromy import Chain
from ..vertex.state import StateVector
from .spec import BetheSpec, root_var

THM2_LIMIT = 4


def flag_roots(N: int, s: int) -> list[VarId]:
    return [root_var(s, a) for a in range(1, N - s + 1)]


def nested_symbolic_state(spec: BetheSpec) -> StateVector:
    """``|psi^(0)⟩`` with symbolic roots; ``t`` enters through ``z = ⊖t``."""
    n = spec.n
    top = n - 1
    words = {(top,) * spec.kk(top): Frac.coerce(1)}
    for m in range(top, 0, -1):
        if m == 1:
            chain = Chain.atoms(n, spec.N)
        else:
            chain = Chain.symbolic(n - m + 1, spec.kk(m - 1), spec.roots(m - 1))
        acc = None
        for word, c in words.items():
            ops = [(w - (m - 1), Poly.var(s)) for w, s in zip(word, spec.roots(m))]
            part = chain.b_string(ops).map_coeffs(Frac.coerce).scale(c)
            acc = part if acc is None else acc + part
        words = {tuple(v + m - 1 for v in w): c for w, c in acc.items()}
    return StateVector(n, spec.N, {bytes(w): c for w, c in words.items()})


def complete_flag_state(N: int) -> StateVector:
    return nested_symbolic_state(BetheSpec(N, N, tuple(range(N - 1, 0, -1))))


def identify(c, groups) -> tuple[Poly, Poly]:
    """Map a coefficient to ``(numerator, denominator)`` in the ``x`` variables.

    ``groups`` lists ``(root_vars, x_vars)``.  Denominator exponents are
    first made equal across each root set so both parts stay symmetric.
    """
    c = Frac.coerce(c)
    num = c.num
    den = dict(c.den)
    den_x = ONE
    for level, (roots, xs) in enumerate(groups, 1):
        have = {v.key: den.pop(v.key, 0) for v in roots}
        top = max(have.values(), default=0)
        for v in roots:
            if top > have[v.key]:
                num = num * factor_poly(v.key, top - have[v.key])
        if top:
            for xv in xs:
                den_x = den_x * factor_poly(xv.key, top)
        names = elem_names(100 + level, len(roots))
        num = rewrite_in_elementary(num, roots, names)
        num = num.subs({nm: elementary_symmetric(xs, l) for l, nm in enumerate(names, 1)})
    if den:
        raise IdentityFailed("coefficient has denominators outside the root sets", witness=den)
    return num, den_x


def thm2_verify(N: int, force: bool = False) -> dict:
    if N < 2:
        raise ValueError("N must be at least 2")
    if N > THM2_LIMIT and not force:
        raise SizeGuardError(f"N={N} exceeds the symbolic bound {THM2_LIMIT}; pass force")
    state = complete_flag_state(N)
    groups = [(flag_roots(N, s), X.take(N - s)) for s in range(1, N)]
    omega = Perm.longest(N)
    certificate = []
    for w in all_perms(N):
        word = bytes((omega * w.inverse()).apply_to_word())
        coeff = state[word] if word in state.amps else FZERO
        num, den = identify(coeff, groups)
        want = groth_value(w)
        if num != want * den:
            raise IdentityFailed(f"coefficient of |{omega * w.inverse()}⟩ differs from G_{w}", witness=str(w))
        certificate.append({"w": str(w), "ket": "".join(map(str, word)), "terms": len(num)})
    stray = [w for w in state.amps if sorted(w) != list(range(N))]
    if stray:
        raise IdentityFailed("non-permutation kets appear", witness=stray)
    return {"check": "thm2", "N": N, "matched": len(certificate), "certificate": certificate, "status": "pass"}


def lemma7_check(pi: Perm) -> dict:
    """``sum_{w in S_(N-1)} G_w(x; ⊖sigma) dbar_w G_pi(sigma; ⊖t)`` identified
    through ``e_l(sigma_1..sigma_(N-1)) -> e_l(x_1..x_(N-1))`` equals ``G_pi(x; ⊖t)``."""
    N = pi.N
    g_mid = rename_alphabet(groth_value(pi), X, MIDDLE, N)
    total = FZERO
    for w in all_perms(N - 1):
        left = with_ominus_second(groth_value(w), N - 2)
        total = total + left * Frac.coerce(apply_perm(g_mid, w, "bar", MIDDLE))
    num, den = identify(total, [(MIDDLE.take(N - 1), X.take(N - 1))])
    want = groth_value(pi)
    if num != want * den:
        raise IdentityFailed(f"identification fails for pi={pi}", witness=str(pi))
    return {"check": "lemma7", "pi": str(pi), "value": display(want, N), "status": "pass"}



def partial_flag_report(spec: BetheSpec, force: bool = False) -> dict:
    """Exploratory: identified coefficients of a partial-flag Bethe state.

    ``e_l(sigma^(s))`` is replaced by ``e_l(x_1..x_(k_s))``.  For each ket
    the report lists the resulting polynomial (when the denominator
    divides out) and whether it is symmetric within every block
    ``x_(k_s + 1), ..., x_(k_(s-1))``.  Nothing here is asserted.
    """
    if spec.N > THM2_LIMIT and not force:
        raise SizeGuardError(f"N={spec.N} exceeds the symbolic bound {THM2_LIMIT}; pass force")
    state = nested_symbolic_state(spec)
    groups = [(spec.roots(s), X.take(spec.kk(s))) for s in spec.levels]
    blocks = [X.take(spec.kk(s - 1))[spec.kk(s):] for s in range(1, spec.n + 1)]
    entries = []
    for word, coeff in sorted(state.items()):
        num, den = identify(coeff, groups)
        try:
            value = poly_exact_div(num, den)
        except ArithmeticFailure:
            value = None
        sym = None
        if value is not None:
            sym = all(is_symmetric(value, blk) for blk in blocks if len(blk) > 1)
        entries.append({"ket": "".join(map(str, word)),
                        "value": None if value is None else display(value, spec.N),
                        "block_symmetric": sym})
    return {"check": "partial-flag", "n": spec.n, "N": spec.N, "k": list(spec.k),
            "kets": entries, "status": "report"}
