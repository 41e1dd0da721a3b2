"""Permutations, beta-divided differences and double beta-Grothendieck polynomials."""

from .divdiff import apply_perm, apply_word, beta_divdiff, ordinary_divdiff
from .perm import Perm, all_perms, compose, perm_ops
from .polynomials import (
    GrothPoly, atom_form, biaxial_groth, cauchy_check, display, dual_groth, groth, groth_value, groth_variants,
    interpolate, interpolation_sum, specialize_family, top_groth,
)

__all__ = [
    "GrothPoly", "Perm", "all_perms", "atom_form", "display", "apply_perm", "apply_word", "beta_divdiff", "biaxial_groth",
    "cauchy_check", "compose", "dual_groth", "groth", "groth_value", "groth_variants", "interpolate",
    "interpolation_sum", "ordinary_divdiff", "perm_ops", "specialize_family", "top_groth",
]
