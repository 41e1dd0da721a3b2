"""Sparse vectors in the natural basis of (C^n)^{⊗N}."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import SizeMismatch


def word_bytes(word: Iterable[int]) -> bytes:
    return bytes(word)


def ket(word) -> str:
    return "|" + "".join(str(c) for c in word) + "⟩"


def bra(word) -> str:
    return "⟨" + "".join(str(c) for c in word) + "|"


class StateVector:
    """Map from occupation words (``bytes``) to coefficients.

    Coefficients may be any ring elements supporting ``+``, ``*`` and
    truthiness (``Frac``, ``Poly``, ``complex``).  Zero amplitudes are
    dropped on construction.
    """

    __slots__ = ("n", "N", "amps")

    def __init__(self, n: int, N: int, amps: Mapping | None = None):
        self.n = n
        self.N = N
        clean = {}
        if amps:
            for w, c in amps.items():
                w = bytes(w)
                if len(w) != N or any(x >= n for x in w):
                    raise ValueError(f"word {tuple(w)} does not fit n={n}, N={N}")
                if _nonzero(c):
                    clean[w] = c
        self.amps = clean

    @classmethod
    def basis(cls, n: int, N: int, word) -> "StateVector":
        return cls(n, N, {bytes(word): 1})

    @classmethod
    def vacuum(cls, n: int, N: int, one=1) -> "StateVector":
        return cls(n, N, {bytes(N): one})

    def _check(self, other: "StateVector"):
        if (self.n, self.N) != (other.n, other.N):
            raise SizeMismatch("state vectors live in different spaces")

    def __add__(self, other: "StateVector") -> "StateVector":
        self._check(other)
        acc = dict(self.amps)
        for w, c in other.amps.items():
            acc[w] = acc[w] + c if w in acc else c
        return StateVector(self.n, self.N, acc)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scale(-1)

    def scale(self, c) -> "StateVector":
        return StateVector(self.n, self.N, {w: a * c for w, a in self.amps.items()})

    def map_coeffs(self, fn) -> "StateVector":
        return StateVector(self.n, self.N, {w: fn(a) for w, a in self.amps.items()})

    def __getitem__(self, word):
        return self.amps.get(bytes(word), 0)

    def __len__(self):
        return len(self.amps)

    def __bool__(self):
        return bool(self.amps)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Amplitudes in lexicographic word order."""
        return sorted(self.amps.items())

    def norm(self) -> float:
        return sum(abs(complex(c)) ** 2 for c in self.amps.values()) ** 0.5

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return (self.n, self.N) == (other.n, other.N) and self.amps == other.amps

    def __repr__(self):
        return f"StateVector(n={self.n}, N={self.N}, {len(self.amps)} terms)"

    def __str__(self):
        if not self.amps:
            return "0"
        return " + ".join(f"({c}){ket(w)}" for w, c in self.items())

    def to_json(self, coeff_json=None) -> dict:
        from ..algebra.serialize import to_json

        enc = coeff_json or _default_coeff_json
        return {
            "n": self.n,
            "N": self.N,
            "amps": [{"word": list(w), "coeff": enc(c, to_json)} for w, c in self.items()],
        }


def _default_coeff_json(c, to_json):
    if isinstance(c, complex):
        return {"re": c.real, "im": c.imag}
    if isinstance(c, float):
        return {"re": c, "im": 0.0}
    return to_json(c)


def _nonzero(c) -> bool:
    return bool(c)


def all_words(n: int, N: int):
    """Every word of length N over 0..n-1, lexicographically."""
    from itertools import product

    for w in product(range(n), repeat=N):
        yield bytes(w)
