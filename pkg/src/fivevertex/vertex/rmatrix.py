"""The GL(n) five-vertex R-matrix and its Yang-Baxter checks.

Entries follow ``R_{ij,kl}(x,y)`` with ``(i,k)`` the row/column pair of the
first tensor factor and ``(j,l)`` that of the second.  Only two shapes are
nonzero:

* swap ``i = l, j = k`` with weight ``1 + [k<l] beta (x ⊖ y)``
* pass ``i = k, j = l`` with weight ``[k>l] (x ⊖ y)``
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from ..algebra.frac import FONE, FZERO, Frac, ominus
from ..algebra.poly import Poly
from ..algebra.variables import BETA, VarId
from ..errors import IdentityFailed

_BETA = Poly.var(BETA)


def r_entry_value(i: int, j: int, k: int, l: int, w, one=1, beta=_BETA):
    """``R_{ij,kl}`` for a precomputed weight ``w = x ⊖ y`` in any ring."""
    out = 0
    if i == l and j == k:
        out = one + beta * w if k < l else one
    if i == k and j == l and k > l:
        out = w
    return out


def r_entries(n: int, w, one=1, beta=_BETA, lo: int = 0) -> dict:
    """Sparse ``{(i,j,k,l): value}`` over colors ``lo..n-1``."""
    out = {}
    for k in range(lo, n):
        for l in range(lo, n):
            if k < l:
                out[(l, k, k, l)] = one + beta * w
            elif k == l:
                out[(k, k, k, k)] = one
            else:
                out[(l, k, k, l)] = one
                out[(k, l, k, l)] = w
    return out


@dataclass
class RMat:
    n: int
    x: object
    y: object
    entries: dict

    def __getitem__(self, idx):
        return self.entries.get(tuple(idx), FZERO)

    def dense(self):
        """Rows and columns ordered by ``i*n + j``."""
        n = self.n
        return [[self[(r // n, r % n, c // n, c % n)] for c in range(n * n)] for r in range(n * n)]

    def columns(self) -> dict:
        """``{(k,l): [((i,j), value), ...]}`` for applying the matrix."""
        cols: dict = {}
        for (i, j, k, l), v in self.entries.items():
            cols.setdefault((k, l), []).append(((i, j), v))
        return cols

    def __str__(self):
        rows = self.dense()
        width = max(len(str(e)) for row in rows for e in row)
        return "\n".join("  ".join(str(e).rjust(width) for e in row) for row in rows)

    def latex(self) -> str:
        body = r" \\ ".join(" & ".join(Frac.coerce(e).latex() for e in row) for row in self.dense())
        return r"\begin{pmatrix} " + body + r" \end{pmatrix}"

    def to_json(self) -> dict:
        from ..algebra.serialize import to_json

        return {
            "n": self.n,
            "entries": [
                {"index": list(idx), "value": to_json(Frac.coerce(v))}
                for idx, v in sorted(self.entries.items())
            ],
        }


def r_matrix(n: int, x, y, lo: int = 0) -> RMat:
    """Symbolic ``R^{(n)}(x, y)`` with :class:`Frac` entries."""
    if n < 2:
        raise ValueError("the R-matrix needs n >= 2")
    w = ominus(x, y)
    ents = r_entries(n, w, FONE, Frac.coerce(_BETA), lo)
    return RMat(n, x, y, ents)


def numeric_r_matrix(n: int, x: complex, y: complex, beta: complex, lo: int = 0) -> RMat:
    w = (x - y) / (1 + beta * y)
    return RMat(n, x, y, r_entries(n, w, 1.0, beta, lo))


# ----- operators on V^{⊗3} ------------------------------------------------------

def _apply(rmat: RMat, a: int, b: int, vec: dict, zero) -> dict:
    """Apply ``R_{ab}`` (factors ``a``, ``b`` of a tensor word) to a sparse vector."""
    cols = rmat.columns()
    out: dict = {}
    for word, c in vec.items():
        for (i, j), v in cols.get((word[a], word[b]), ()):
            w = list(word)
            w[a], w[b] = i, j
            w = tuple(w)
            out[w] = out.get(w, zero) + c * v
    return out


def _ybe_sides(n: int, r12, r13, r23, zero, one):
    lhs, rhs = {}, {}
    for word in product(range(n), repeat=3):
        vec = {word: one}
        left = _apply(r12, 0, 1, _apply(r13, 0, 2, _apply(r23, 1, 2, vec, zero), zero), zero)
        right = _apply(r23, 1, 2, _apply(r13, 0, 2, _apply(r12, 0, 1, vec, zero), zero), zero)
        lhs[word], rhs[word] = left, right
    return lhs, rhs


def ybe_check(n: int, mode: str = "symbolic", samples: int = 10, seed: int = 0,
              tol: float = 1e-10, x=None, y=None, z=None) -> dict:
    """Compare both sides of the Yang-Baxter equation entry by entry.

    Symbolic mode is exact; numeric mode draws random complex
    ``(x, y, z, beta)`` and reports the largest deviation.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    entries = n ** 6
    if mode == "symbolic":
        x = x or VarId("x", 1)
        y = y or VarId("x", 2)
        z = z or VarId("x", 3)
        lhs, rhs = _ybe_sides(n, r_matrix(n, x, y), r_matrix(n, x, z), r_matrix(n, y, z), FZERO, FONE)
        for col in sorted(lhs):
            for row in sorted(set(lhs[col]) | set(rhs[col])):
                d = lhs[col].get(row, FZERO) - rhs[col].get(row, FZERO)
                if d:
                    raise IdentityFailed(f"YBE fails at entry {row + col}", witness=(row, col, d))
        return {"check": "ybe", "n": n, "mode": mode, "entries": entries, "status": "pass"}
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        xs, ys, zs, beta = (_draw(rng) for _ in range(4))
        lhs, rhs = _ybe_sides(
            n,
            numeric_r_matrix(n, xs, ys, beta),
            numeric_r_matrix(n, xs, zs, beta),
            numeric_r_matrix(n, ys, zs, beta),
            0j,
            1 + 0j,
        )
        for col in lhs:
            for row in set(lhs[col]) | set(rhs[col]):
                worst = max(worst, abs(lhs[col].get(row, 0) - rhs[col].get(row, 0)))
    status = "pass" if worst <= tol else "fail"
    report = {"check": "ybe", "n": n, "mode": mode, "entries": entries,
              "samples": samples, "max_deviation": worst, "status": status}
    if status == "fail":
        raise IdentityFailed(f"numeric YBE deviation {worst:.3e} exceeds {tol}", witness=report)
    return report


def _draw(rng: random.Random) -> complex:
    import cmath

    r = rng.uniform(0.5, 1.5)
    return r * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))


# ----- contraction identities ---------------------------------------------------

def _contract_first(n, R1: RMat, R2: RMat) -> dict:
    """``sum_{k,l} R1_{ij,lk} R2_{kl,st}``."""
    out: dict = {}
    for (i, j, l, k), v1 in R1.entries.items():
        for (k2, l2, s, t), v2 in R2.entries.items():
            if (k2, l2) == (k, l):
                key = (i, j, s, t)
                out[key] = out.get(key, FZERO) + v1 * v2
    return out


def _compare(name: str, got: dict, want: dict):
    for key in sorted(set(got) | set(want)):
        d = got.get(key, FZERO) - want.get(key, FZERO)
        if d:
            raise IdentityFailed(f"{name} fails at index {key}", witness=(key, d))


def support_identities_check(n: int, which=("ybe01", "ybe02", "ybe03")) -> dict:
    """The three R-matrix identities the YBE induction step rests on."""
    x, y, z = VarId("x", 1), VarId("x", 2), VarId("x", 3)
    results = {}
    if "ybe01" in which:
        _compare("ybe01", _contract_first(n, r_matrix(n, x, y), r_matrix(n, y, z)),
                 r_matrix(n, x, z).entries)
        results["ybe01"] = "pass"
    if "ybe02" in which:
        _compare("ybe02", _contract_first(n, r_matrix(n, y, z), r_matrix(n, x, y)),
                 r_matrix(n, x, z).entries)
        results["ybe02"] = "pass"
    if "ybe03" in which:
        px, py, pz = (Poly.var(v) for v in (x, y, z))
        b = _BETA
        c_xx = Frac.coerce((py - pz) * (1 + b * px))
        c_xz = Frac.coerce((px - py) * (1 + b * pz))
        c_xy = Frac.coerce((px - pz) * (1 + b * py))
        Rxx, Rxz, Rxy = r_matrix(n, x, x), r_matrix(n, x, z), r_matrix(n, x, y)
        lhs: dict = {}
        for key, v in Rxx.entries.items():
            lhs[key] = lhs.get(key, FZERO) + c_xx * v
        for key, v in Rxz.entries.items():
            lhs[key] = lhs.get(key, FZERO) + c_xz * v
        rhs = {key: c_xy * v for key, v in Rxy.entries.items()}
        _compare("ybe03", lhs, rhs)
        results["ybe03"] = "pass"
    return {"check": "support_identities", "n": n, "results": results, "status": "pass"}
