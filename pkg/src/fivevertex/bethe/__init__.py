"""Nested Bethe ansatz: equations, eigenvalues, numeric solutions and Whitney relations."""

from .eigen import EigenData, RatFunc, eigenvalue_chain, residues, top_eigenvalue
from .eigenstate import eigenstate_verify, nested_state
from .equations import BAEEquation, BAESystem, bae_generate, bae_qc, beta_zero_check, qk_form_check
from .givental import gamma_matrix, givental_kim
from .solve import BetheSolution, SolveReport, bae_solve, solve_seeded
from .spec import BetheSpec, draw_params, root_var
from .thm2 import complete_flag_state, identify, lemma7_check, nested_symbolic_state, partial_flag_report, thm2_verify
from .whitney import Relation, RelationSet, descending_sequences, whitney_qc, whitney_qk, whitney_sweep

__all__ = [
    "BAEEquation", "BAESystem", "BetheSolution", "BetheSpec", "EigenData", "RatFunc", "Relation",
    "RelationSet", "SolveReport", "bae_generate", "bae_qc", "bae_solve", "beta_zero_check",
    "complete_flag_state", "descending_sequences", "draw_params", "eigenstate_verify",
    "eigenvalue_chain", "gamma_matrix", "givental_kim", "identify", "lemma7_check", "nested_state",
    "nested_symbolic_state", "partial_flag_report", "qk_form_check", "residues", "root_var",
    "solve_seeded", "thm2_verify", "top_eigenvalue", "whitney_qc", "whitney_qk", "whitney_sweep",
]
