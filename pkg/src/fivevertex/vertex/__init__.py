"""GL(n) five-vertex chain: R-matrix, monodromy entries and Bethe vectors."""

from .bstate import bstate_expand, bstate_vector, descending_ops, permuted_ops
from .checks import (
    RELATIONS,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    lemma5_check,
    relations_check,
    thm1_check,
)
from .monodromy import (
    Chain,
    apply_B_left,
    apply_B_right,
    as_chain,
    monodromy_entry,
    transfer_apply,
    twist_symbols,
)
from .rmatrix import RMat, numeric_r_matrix, r_entries, r_matrix, support_identities_check, ybe_check
from .state import StateVector, all_words, bra, ket

__all__ = [
    "Chain", "RELATIONS", "RMat", "StateVector", "all_words", "apply_B_left", "apply_B_right",
    "as_chain", "bra", "bstate_expand", "bstate_vector", "descending_ops", "ket", "lemma2_check",
    "lemma3_check", "lemma4_check", "lemma5_check", "monodromy_entry", "numeric_r_matrix",
    "permuted_ops", "r_entries", "r_matrix", "relations_check", "support_identities_check",
    "thm1_check", "transfer_apply", "twist_symbols", "ybe_check",
]
