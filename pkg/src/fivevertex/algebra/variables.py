"""Variable identifiers.

Every indeterminate is a triple ``(family, level, pos)``.  Single-index
variables such as ``x_3`` or ``t_2`` put the index in ``level`` and leave
``pos = 0``; doubly indexed ones such as ``sigma^(2)_1`` use both.

Variables are totally ordered lexicographically by
``(family rank, level, pos)``; the same order drives the monomial order.
"""

from __future__ import annotations

from functools import total_ordering

FAMILIES = (
    "beta", "x", "sigma", "t", "z", "q", "u", "lambda", "eta", "bigX", "bigY",
    "b", "y", "elem",
)
_FAMILY_RANK = {name: i for i, name in enumerate(FAMILIES)}

_LEVEL_BITS = 20
_POS_BITS = 20
_LIMIT = 1 << 20

_TEX = {
    "beta": r"\beta", "sigma": r"\sigma", "lambda": r"\lambda", "eta": r"\eta",
    "bigX": "X", "bigY": "Y", "elem": "E",
}


@total_ordering
class VarId:
    __slots__ = ("family", "level", "pos", "key")

    def __init__(self, family: str, level: int = 0, pos: int = 0):
        if family not in _FAMILY_RANK:
            raise ValueError(f"unknown variable family {family!r}")
        if not (0 <= level < _LIMIT and 0 <= pos < _LIMIT):
            raise ValueError(f"index out of range: {family}({level},{pos})")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "pos", pos)
        key = (_FAMILY_RANK[family] << (_LEVEL_BITS + _POS_BITS)) | (level << _POS_BITS) | pos
        object.__setattr__(self, "key", key)

    def __setattr__(self, name, value):
        raise AttributeError("VarId is immutable")

    @classmethod
    def from_key(cls, key: int) -> "VarId":
        return _decode(key)

    @classmethod
    def parse(cls, name: str) -> "VarId":
        """Inverse of :meth:`name`: ``"x.1"``, ``"sigma.2.1"``, ``"beta.0"``."""
        parts = name.split(".")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad variable name {name!r}")
        family = parts[0]
        level = int(parts[1])
        pos = int(parts[2]) if len(parts) == 3 else 0
        return cls(family, level, pos)

    @property
    def name(self) -> str:
        if self.pos:
            return f"{self.family}.{self.level}.{self.pos}"
        return f"{self.family}.{self.level}"

    def text(self) -> str:
        if self.family == "beta":
            return "beta"
        if self.family in ("u", "lambda", "y") and self.level == 0 and self.pos == 0:
            return self.family
        if self.family == "sigma" and self.level == 0:
            return f"s{self.pos}"
        if self.pos:
            return f"{self.family}{self.level}_{self.pos}"
        return f"{self.family}{self.level}"

    def latex(self) -> str:
        base = _TEX.get(self.family, self.family)
        if self.family == "beta":
            return base
        if self.family in ("u", "lambda", "y") and self.level == 0 and self.pos == 0:
            return base
        if self.family == "sigma" and self.level == 0:
            return f"{base}_{{{self.pos}}}"
        if self.pos:
            return f"{base}^{{({self.level})}}_{{{self.pos}}}"
        return f"{base}_{{{self.level}}}"

    def to_json(self) -> dict:
        return {"family": self.family, "level": self.level, "pos": self.pos}

    def __eq__(self, other):
        return isinstance(other, VarId) and self.key == other.key

    def __lt__(self, other):
        if not isinstance(other, VarId):
            return NotImplemented
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"VarId({self.family!r}, {self.level}, {self.pos})"

    def __reduce__(self):
        return (VarId, (self.family, self.level, self.pos))


_decode_cache: dict[int, VarId] = {}


def _decode(key: int) -> VarId:
    v = _decode_cache.get(key)
    if v is None:
        pos = key & (_LIMIT - 1)
        level = (key >> _POS_BITS) & (_LIMIT - 1)
        fam = FAMILIES[key >> (_LEVEL_BITS + _POS_BITS)]
        v = VarId(fam, level, pos)
        _decode_cache[key] = v
    return v


BETA = VarId("beta")


def x(i: int) -> VarId:
    return VarId("x", i)


def t(i: int) -> VarId:
    return VarId("t", i)


def z(i: int) -> VarId:
    return VarId("z", i)


def q(m: int) -> VarId:
    return VarId("q", m)


def b(i: int) -> VarId:
    return VarId("b", i)


def sigma(level: int, pos: int) -> VarId:
    return VarId("sigma", level, pos)


def u(i: int = 0) -> VarId:
    return VarId("u", i)


class Alphabet:
    """An indexed family of variables ``var(1), var(2), ...``.

    ``Alphabet("x")`` yields ``x_i``; ``Alphabet("sigma", 2)`` yields
    ``sigma^(2)_i``.
    """

    __slots__ = ("family", "level")

    def __init__(self, family: str, level: int | None = None):
        self.family = family
        self.level = level

    def __call__(self, i: int) -> VarId:
        if self.level is None:
            return VarId(self.family, i)
        return VarId(self.family, self.level, i)

    def take(self, n: int) -> list[VarId]:
        return [self(i) for i in range(1, n + 1)]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and (self.family, self.level) == (other.family, other.level)

    def __hash__(self):
        return hash((self.family, self.level))

    def __repr__(self):
        if self.level is None:
            return f"Alphabet({self.family!r})"
        return f"Alphabet({self.family!r}, {self.level})"


X = Alphabet("x")
Z = Alphabet("z")
T = Alphabet("t")
MIDDLE = Alphabet("sigma", 0)
