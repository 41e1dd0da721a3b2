"""Expansions of ``B_{k_1}(u_1) ... B_{k_r}(u_r)|Ω⟩`` in the permutation kets.

For a permutation ``w`` of ``1..N`` the ket ``|w⟩`` carries the letter
``w(i) - 1`` at site ``i``.  By default the chain uses polynomial weights in
the atoms ``z_j = ⊖t_j``, so every coefficient is a :class:`Poly` that can be
compared with a Grothendieck polynomial directly.
"""

from __future__ import annotations

from typing import Sequence

from ..groth.perm import Perm
from .monodromy import Chain
from .state import StateVector


def bstate_expand(ops: Sequence[tuple[int, object]], N: int, chain: Chain | None = None,
                  n: int | None = None):
    """Return ``(perm_coeffs, other_words)``.

    ``perm_coeffs`` maps each :class:`Perm` whose ket appears to its
    coefficient; ``other_words`` collects any remaining words (empty whenever
    the colors are a permutation of ``N-1, ..., 1``).
    """
    if n is None:
        n = N if chain is None else chain.n
    chain = chain or Chain.atoms(n, N)
    state = chain.b_string(ops)
    perms, others = {}, {}
    for word, c in state.items():
        if sorted(word) == list(range(N)):
            perms[Perm.from_word_letters(word)] = c
        else:
            others[word] = c
    return perms, others


def bstate_vector(ops: Sequence[tuple[int, object]], N: int, chain: Chain | None = None,
                  n: int | None = None) -> StateVector:
    if n is None:
        n = N if chain is None else chain.n
    chain = chain or Chain.atoms(n, N)
    return chain.b_string(ops)


def descending_ops(N: int, spectral) -> list[tuple[int, object]]:
    """``B_{N-1}(u_1) B_{N-2}(u_2) ... B_1(u_{N-1})``."""
    return [(N - a, spectral(a)) for a in range(1, N)]


def permuted_ops(w: Perm, spectral) -> list[tuple[int, object]]:
    """``B_{w(1)}(u_1) ... B_{w(N-1)}(u_{N-1})`` for ``w`` in ``S_{N-1}``."""
    return [(w(a), spectral(a)) for a in range(1, w.N + 1)]
