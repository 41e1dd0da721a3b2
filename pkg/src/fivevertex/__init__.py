"""Exact computations for the GL(n) asymmetric five-vertex model.

Subpackages: ``algebra`` (exact kernel), ``groth`` (permutations and
double beta-Grothendieck polynomials), ``vertex`` (R-matrix, monodromy,
B-operators) and ``bethe`` (nested Bethe ansatz and Whitney relations).
"""

__version__ = "0.1.0"
