"""Exact-arithmetic kernel: polynomials, structured fractions, symmetric functions, roots."""

from .frac import FONE, FZERO, Frac, ominus, oplus, poly_arith, substitute
from .poly import ONE, ZERO, Poly, poly_exact_div
from .roots import find_roots
from .serialize import from_json, to_json
from .symmetric import elementary_symmetric, expand_elementary, rewrite_in_elementary
from .variables import BETA, MIDDLE, Alphabet, VarId

__all__ = [
    "BETA", "MIDDLE", "Alphabet", "FONE", "FZERO", "Frac", "ONE", "Poly", "VarId", "ZERO",
    "elementary_symmetric", "expand_elementary", "find_roots", "from_json", "ominus", "oplus",
    "poly_arith", "poly_exact_div", "rewrite_in_elementary", "substitute", "to_json",
]
