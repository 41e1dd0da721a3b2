"""Permutations of {1..N} in one-line notation."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from ..errors import SizeMismatch


class Perm:
    """Immutable permutation; ``w.oneline[i-1] == w(i)``."""

    __slots__ = ("oneline",)

    def __init__(self, oneline: Iterable[int]):
        seq = tuple(int(v) for v in oneline)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise ValueError(f"not a permutation of 1..{len(seq)}: {seq}")
        object.__setattr__(self, "oneline", seq)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Accept ``"213"``, ``"2 1 3"`` or ``"2,1,3"``."""
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        return cls(int(p) for p in parts)

    @classmethod
    def identity(cls, N: int) -> "Perm":
        return cls(range(1, N + 1))

    @classmethod
    def longest(cls, N: int) -> "Perm":
        return cls(range(N, 0, -1))

    @classmethod
    def simple(cls, i: int, N: int) -> "Perm":
        if not 1 <= i < N:
            raise ValueError(f"s_{i} is not in S_{N}")
        seq = list(range(1, N + 1))
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
        return cls(seq)

    @classmethod
    def from_word(cls, word: Sequence[int], N: int) -> "Perm":
        """``s_{word[0]} s_{word[1]} ...`` as a product of maps."""
        w = cls.identity(N)
        for i in word:
            w = w * cls.simple(i, N)
        return w

    @classmethod
    def rho(cls, k: int, N: int) -> "Perm":
        """``s_1 s_2 ... s_k``; the identity for ``k = 0``."""
        return cls.from_word(range(1, k + 1), N)

    @property
    def N(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * self.N
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Perm(inv)

    def length(self) -> int:
        s = self.oneline
        return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])

    def left_descents(self) -> list[int]:
        """``i`` with ``l(s_i w) < l(w)``: value ``i+1`` sits left of ``i``."""
        pos = self.inverse().oneline
        return [i for i in range(1, self.N) if pos[i - 1] > pos[i]]

    def right_descents(self) -> list[int]:
        """``i`` with ``l(w s_i) < l(w)``: ``w(i) > w(i+1)``."""
        s = self.oneline
        return [i for i in range(1, self.N) if s[i - 1] > s[i]]

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word ``(i_1, ..., i_l)``."""
        word = []
        w = self
        while True:
            desc = w.left_descents()
            if not desc:
                return tuple(word)
            i = desc[0]
            word.append(i)
            w = Perm.simple(i, self.N) * w

    def is_identity(self) -> bool:
        return self.oneline == tuple(range(1, self.N + 1))

    def apply_to_word(self) -> tuple[int, ...]:
        """Occupation word with letter ``w(i) - 1`` at site ``i``."""
        return tuple(v - 1 for v in self.oneline)

    @classmethod
    def from_word_letters(cls, letters: Sequence[int]) -> "Perm":
        """Inverse of :meth:`apply_to_word`."""
        return cls(v + 1 for v in letters)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.oneline == other.oneline

    def __lt__(self, other):
        return self.oneline < other.oneline

    def __hash__(self):
        return hash(self.oneline)

    def __repr__(self):
        return f"Perm({self})"

    def __str__(self):
        if self.N < 10:
            return "".join(map(str, self.oneline))
        return " ".join(map(str, self.oneline))


def compose(w: Perm, v: Perm) -> Perm:
    """``(w v)(i) = w(v(i))``."""
    if w.N != v.N:
        raise SizeMismatch(f"cannot compose S_{w.N} with S_{v.N}")
    return Perm(w.oneline[j - 1] for j in v.oneline)


def all_perms(N: int) -> list[Perm]:
    """S_N in lexicographic order of one-line notation."""
    return [Perm(p) for p in permutations(range(1, N + 1))]


def perm_ops(w: Perm, v: Perm) -> dict:
    if w.N != v.N:
        raise SizeMismatch(f"permutations of different sizes: {w.N} and {v.N}")
    return {
        "compose": compose(w, v),
        "inverse": w.inverse(),
        "length": w.length(),
        "reduced_word": w.reduced_word(),
        "apply_to_word": w.apply_to_word(),
    }
