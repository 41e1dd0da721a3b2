"""Monodromy-matrix entries acting on kets and bras without building matrices.

An entry ``T_{row,col}(u)`` is a sum over auxiliary color paths: the path
enters site 1 with color ``col`` and leaves site ``N`` with color ``row``.
At a site holding color ``s`` with incoming auxiliary color ``a`` there are
at most two local moves (``w = u ⊖ t_i``):

* swap: the site takes ``a``, the path continues with ``s``;
  weight ``1 + beta w`` if ``a < s`` and ``1`` otherwise
* pass: only when ``a > s``; nothing changes, weight ``w``

Each action is a dynamic program over sites that merges paths sharing the
same auxiliary color and partial output word.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..algebra.frac import Frac, ominus
from ..algebra.poly import Poly
from ..algebra.variables import BETA, T, Z, Alphabet, b
from ..errors import BadColor, IndexOutOfRange, SizeMismatch
from .state import StateVector

_BETA = Poly.var(BETA)


class Chain:
    """An inhomogeneous chain of ``N`` sites with local space ``C^n``.

    ``weight(u, i)`` returns ``u ⊖ t_i`` in whatever ring the chain uses.
    """

    def __init__(self, n: int, N: int, weight: Callable, beta, one=1, zero=0, label: str = ""):
        if n < 2:
            raise ValueError("local dimension must be at least 2")
        self.n = n
        self.N = N
        self._weight = weight
        self.beta = beta
        self.one = one
        self.zero = zero
        self.label = label
        self._cache: dict = {}

    # ----- constructors ---------------------------------------------------
    @classmethod
    def symbolic(cls, n: int, N: int, t: Alphabet | Sequence = T) -> "Chain":
        """Weights ``(u - t_i) / (1 + beta t_i)`` as :class:`Frac`."""
        ts = t.take(N) if isinstance(t, Alphabet) else list(t)
        if len(ts) != N:
            raise SizeMismatch(f"need {N} inhomogeneities, got {len(ts)}")
        return cls(n, N, lambda u, i: ominus(u, ts[i - 1]), Frac.coerce(_BETA),
                   Frac.coerce(1), Frac.coerce(0), "symbolic")

    @classmethod
    def atoms(cls, n: int, N: int, z: Alphabet = Z) -> "Chain":
        """Polynomial weights: ``t_i`` enters only through ``z_i = ⊖t_i``."""
        zs = [Poly.var(v) for v in z.take(N)]

        def weight(u, i):
            pu = Poly.coerce(u)
            return pu + zs[i - 1] + _BETA * pu * zs[i - 1]

        return cls(n, N, weight, _BETA, Poly.const(1), Poly.const(0), "atoms")

    @classmethod
    def numeric(cls, n: int, t: Sequence[complex], beta: complex) -> "Chain":
        ts = [complex(v) for v in t]

        def weight(u, i):
            return (u - ts[i - 1]) / (1 + beta * ts[i - 1])

        return cls(n, len(ts), weight, complex(beta), 1 + 0j, 0j, "numeric")

    # ----- local weights ----------------------------------------------------
    def weights(self, u) -> list:
        """``[(w_i, 1 + beta w_i)]`` for ``i = 1..N``, cached per ``u``."""
        try:
            key = u if not isinstance(u, list) else tuple(u)
            hit = self._cache.get(key)
        except TypeError:
            key, hit = None, None
        if hit is None:
            hit = []
            for i in range(1, self.N + 1):
                w = self._weight(u, i)
                hit.append((w, self.one + self.beta * w))
            if key is not None:
                if len(self._cache) > 256:
                    self._cache.clear()
                self._cache[key] = hit
        return hit

    def _check_index(self, row: int, col: int):
        for v in (row, col):
            if not 0 <= v < self.n:
                raise IndexOutOfRange(f"monodromy index {v} outside 0..{self.n - 1}")

    def _check_state(self, s: StateVector):
        if (s.n, s.N) != (self.n, self.N):
            raise SizeMismatch(f"state (n={s.n}, N={s.N}) does not fit chain (n={self.n}, N={self.N})")

    # ----- kets -------------------------------------------------------------
    def entry(self, row: int, col: int, u, s: StateVector) -> StateVector:
        """``T_{row,col}(u) |s⟩``."""
        self._check_index(row, col)
        self._check_state(s)
        loc = self.weights(u)
        out: dict = {}
        for word, c in s.amps.items():
            layer = {(col, b""): c}
            for i, site in enumerate(word):
                w, p = loc[i]
                nxt: dict = {}
                for (a, partial), coef in layer.items():
                    key = (site, partial + bytes((a,)))
                    val = coef * p if a < site else coef
                    nxt[key] = nxt[key] + val if key in nxt else val
                    if a > site:
                        key = (a, partial + bytes((site,)))
                        val = coef * w
                        nxt[key] = nxt[key] + val if key in nxt else val
                layer = nxt
            for (a, partial), coef in layer.items():
                if a == row:
                    out[partial] = out[partial] + coef if partial in out else coef
        return StateVector(self.n, self.N, out)

    def A(self, u, s):
        return self.entry(0, 0, u, s)

    def B(self, k: int, u, s: StateVector) -> StateVector:
        self._check_color(k)
        return self.entry(0, k, u, s)

    def C(self, k: int, u, s):
        self._check_color(k)
        return self.entry(k, 0, u, s)

    def D(self, i: int, j: int, u, s):
        self._check_color(i)
        self._check_color(j)
        return self.entry(i, j, u, s)

    def _check_color(self, k: int):
        if not 1 <= k <= self.n - 1:
            raise BadColor(f"color {k} outside 1..{self.n - 1}")

    def vacuum(self) -> StateVector:
        return StateVector.vacuum(self.n, self.N, self.one)

    def b_string(self, ops: Sequence[tuple[int, object]], s: StateVector | None = None) -> StateVector:
        """``B_{k_1}(u_1) ... B_{k_r}(u_r) |s⟩``; the rightmost operator acts first."""
        state = self.vacuum() if s is None else s
        for k, u in reversed(list(ops)):
            state = self.B(k, u, state)
        return state

    def transfer(self, u, twist: Sequence, s: StateVector) -> StateVector:
        """``t(u)|s⟩ = sum_i b_i T_{ii}(u)|s⟩``."""
        if len(twist) != self.n:
            raise SizeMismatch(f"twist has {len(twist)} entries, expected {self.n}")
        acc = StateVector(self.n, self.N)
        for i, b in enumerate(twist):
            acc = acc + self.entry(i, i, u, s).scale(b)
        return acc

    # ----- bras -------------------------------------------------------------
    def entry_right(self, row: int, col: int, u, s: StateVector) -> StateVector:
        """``⟨s| T_{row,col}(u)``, returned as a vector of bra words."""
        self._check_index(row, col)
        self._check_state(s)
        loc = self.weights(u)
        out: dict = {}
        N = self.N
        for word, c in s.amps.items():
            # walk from site N back to site 1; ``alpha`` is the outgoing aux color
            layer = {(row, b""): c}
            for i in range(N - 1, -1, -1):
                site = word[i]
                w, p = loc[i]
                nxt: dict = {}
                for (alpha, suffix), coef in layer.items():
                    key = (site, bytes((alpha,)) + suffix)
                    val = coef * p if site < alpha else coef
                    nxt[key] = nxt[key] + val if key in nxt else val
                    if alpha > site:
                        key = (alpha, bytes((site,)) + suffix)
                        val = coef * w
                        nxt[key] = nxt[key] + val if key in nxt else val
                layer = nxt
            for (a, suffix), coef in layer.items():
                if a == col:
                    out[suffix] = out[suffix] + coef if suffix in out else coef
        return StateVector(self.n, self.N, out)

    def B_right(self, k: int, u, s: StateVector) -> StateVector:
        self._check_color(k)
        return self.entry_right(0, k, u, s)

    def b_string_right(self, s: StateVector, ops: Sequence[tuple[int, object]]) -> StateVector:
        """``⟨s| B_{k_1}(u_1) ... B_{k_r}(u_r)``; the leftmost operator acts first."""
        for k, u in ops:
            s = self.B_right(k, u, s)
        return s


# ----- function-style entry points ------------------------------------------------

def as_chain(t, n: int, N: int) -> Chain:
    """Accept a :class:`Chain`, an alphabet, or a list of inhomogeneities."""
    if isinstance(t, Chain):
        if (t.n, t.N) != (n, N):
            raise SizeMismatch("chain size does not match the state")
        return t
    if t is None:
        return Chain.symbolic(n, N)
    if isinstance(t, Alphabet):
        return Chain.symbolic(n, N, t)
    t = list(t)
    if len(t) != N:
        raise SizeMismatch(f"need {N} inhomogeneities, got {len(t)}")
    return Chain.symbolic(n, N, t)


def apply_B_left(k: int, u, s: StateVector, t=None) -> StateVector:
    """``B_k(u)|s⟩`` on a chain with inhomogeneities ``t``."""
    chain = as_chain(t, s.n, s.N)
    return chain.B(k, u, s)


def apply_B_right(k: int, u, dual, t=None, n: int | None = None) -> StateVector:
    """``⟨dual| B_k(u)``; ``dual`` is a word or a bra vector."""
    if not isinstance(dual, StateVector):
        word = bytes(dual)
        if n is None:
            raise ValueError("pass n when giving a bare word")
        dual = StateVector.basis(n, len(word), word)
    chain = as_chain(t, dual.n, dual.N)
    return chain.B_right(k, u, dual)


def monodromy_entry(n: int, N: int, row: int, col: int, u, t=None) -> Callable[[StateVector], StateVector]:
    chain = as_chain(t, n, N)
    chain._check_index(row, col)
    return lambda s: chain.entry(row, col, u, s)


def transfer_apply(u, twist: Sequence, s: StateVector, t=None) -> StateVector:
    chain = as_chain(t, s.n, s.N)
    return chain.transfer(u, twist, s)


def twist_symbols(n: int) -> list[Poly]:
    """Formal twist ``(b_0, ..., b_{n-1})``."""
    return [Poly.var(b(i)) for i in range(n)]
