"""Rank, length and occupation numbers of a nested Bethe ansatz problem."""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from typing import Sequence

from ..algebra.poly import Poly
from ..algebra.variables import BETA, VarId
from ..errors import DegenerateRoots, SizeMismatch


def root_var(m: int, a: int) -> VarId:
    """``sigma^(m)_a``; level 0 is the inhomogeneity ``t_a``."""
    return VarId("t", a) if m == 0 else VarId("sigma", m, a)


def q_var(m: int) -> VarId:
    return VarId("q", m)


@dataclass(frozen=True)
class BetheSpec:
    """``n`` colors on ``N`` sites with ``k = (k_1, ..., k_{n-1})`` excitations.

    By default ``N > k_1 > ... > k_{n-1} > 0`` is enforced; pass
    ``strict=False`` to allow equalities and zeros (e.g. the vacuum).
    ``params`` optionally holds numeric ``t``, ``q`` and ``beta``.
    """

    n: int
    N: int
    k: tuple
    params: dict = field(default_factory=dict, compare=False, hash=False)
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        if self.n < 2:
            raise ValueError("rank n must be at least 2")
        if self.N < 1:
            raise ValueError("need at least one site")
        if len(self.k) != self.n - 1:
            raise SizeMismatch(f"k needs {self.n - 1} entries, got {len(self.k)}")
        chain = (self.N,) + self.k
        if self.strict:
            if any(a <= b for a, b in zip(chain, chain[1:])) or self.k[-1] <= 0:
                raise ValueError(f"k must satisfy N > k_1 > ... > k_(n-1) > 0, got {self.k}")
        elif any(a < b for a, b in zip(chain, chain[1:])) or self.k[-1] < 0:
            raise ValueError(f"k must be non-increasing and non-negative, got {self.k}")

    def kk(self, m: int) -> int:
        """``k_m`` with ``k_0 = N`` and ``k_n = 0``."""
        if m == 0:
            return self.N
        if m >= self.n:
            return 0
        return self.k[m - 1]

    @property
    def levels(self) -> range:
        return range(1, self.n)

    def roots(self, m: int) -> list[VarId]:
        return [root_var(m, a) for a in range(1, self.kk(m) + 1)]

    def unknowns(self) -> list[VarId]:
        return [v for m in self.levels for v in self.roots(m)]

    def with_params(self, **params) -> "BetheSpec":
        return BetheSpec(self.n, self.N, self.k, dict(params), self.strict)

    # numeric parameters ---------------------------------------------------
    @property
    def t(self) -> list[complex]:
        return list(self.params["t"])

    @property
    def q(self) -> list[complex]:
        """``[q_1, ..., q_{n-1}]``."""
        return list(self.params["q"])

    @property
    def beta(self):
        return self.params.get("beta", -1)

    def twist(self) -> list[complex]:
        """``(b_0, ..., b_{n-1})`` with ``b_{n-1} = 1`` and ``q_s = b_{s-1}/b_s``."""
        bs = [1 + 0j]
        for qs in reversed(self.q):
            bs.insert(0, qs * bs[0])
        return bs


def draw_params(spec: BetheSpec, seed: int = 0, beta: complex = -1, sep: float = 0.1) -> BetheSpec:
    """Seeded generic parameters.

    ``t`` lies in the annulus ``0.5 <= |t| <= 1.5`` with pairwise distances at
    least ``sep`` and ``|1 + beta t| >= sep``; ``|q_m|`` lies in ``[0.1, 0.9]``.
    """
    rng = random.Random(seed)

    def point():
        return rng.uniform(0.5, 1.5) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))

    ts: list[complex] = []
    while len(ts) < spec.N:
        c = point()
        if all(abs(c - d) >= sep for d in ts) and abs(1 + beta * c) >= sep:
            ts.append(c)
    qs = [rng.uniform(0.1, 0.9) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi)) for _ in spec.levels]
    return spec.with_params(t=ts, q=qs, beta=beta)


def check_distinct(values: Sequence[complex], what: str, tol: float = 1e-8):
    vals = list(values)
    for i in range(len(vals)):
        for j in range(i):
            if abs(vals[i] - vals[j]) <= tol * max(1.0, abs(vals[i])):
                raise DegenerateRoots(f"{what}: entries {j + 1} and {i + 1} coincide; retry with a new seed")


BETA_POLY = Poly.var(BETA)
