"""JSON encoding of polynomials and structured fractions.

Schema::

    {"vars": [{"family": "x", "level": 1, "pos": 0}, ...],
     "terms": [{"num": "-3", "den": "2", "exps": {"x.1": 2, "beta.0": 1}}, ...],
     "denfactors": {"t.2": 1}}

Integers are decimal strings and terms appear in canonical (descending
lex) monomial order.
"""

from __future__ import annotations

from fractions import Fraction

from .frac import Frac
from .poly import Poly, _norm
from .variables import VarId


def to_json(value) -> dict:
    f = Frac.coerce(value)
    names = sorted(f.variables())
    terms = []
    for m, c in f.num.sorted_terms():
        c = Fraction(c)
        terms.append({
            "num": str(c.numerator),
            "den": str(c.denominator),
            "exps": {VarId.from_key(k).name: e for k, e in m},
        })
    return {
        "vars": [v.to_json() for v in names],
        "terms": terms,
        "denfactors": {VarId.from_key(k).name: e for k, e in f.den},
    }


def from_json(data: dict):
    """Inverse of :func:`to_json`; returns a Poly when there is no denominator."""
    acc = {}
    for term in data.get("terms", []):
        c = _norm(Fraction(int(term["num"]), int(term["den"])))
        m = tuple(sorted((VarId.parse(name).key, int(e)) for name, e in term["exps"].items() if int(e)))
        acc[m] = acc.get(m, 0) + c
    num = Poly({m: _norm(c) for m, c in acc.items() if c != 0})
    den = {VarId.parse(name): int(e) for name, e in data.get("denfactors", {}).items()}
    if not den:
        return num
    return Frac(num, den)
