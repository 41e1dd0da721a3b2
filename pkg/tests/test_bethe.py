from math import comb

import numpy as np
import pytest
import sympy

from conftest import sym, to_sympy
from fivevertex.algebra import BETA, Poly, elementary_symmetric
from fivevertex.algebra.variables import T, X, b as b_var
from fivevertex.bethe import (
    BetheSpec, RatFunc, bae_generate, bae_qc, bae_solve, beta_zero_check, descending_sequences, draw_params,
    eigenstate_verify, eigenvalue_chain, gamma_matrix, givental_kim, identify, lemma7_check,
    nested_state, nested_symbolic_state, partial_flag_report, qk_form_check, residues, root_var, solve_seeded,
    thm2_verify, top_eigenvalue, whitney_qc, whitney_qk, whitney_sweep,
)
from fivevertex.bethe.eigen import U
from fivevertex.bethe.spec import q_var
from fivevertex.bethe.thm2 import complete_flag_state, flag_roots
from fivevertex.errors import DegenerateRoots, SizeGuardError, VerificationFailed
from fivevertex.groth import Perm, all_perms, groth_value

BETHE_CASES = [(2, 2, (1,)), (2, 3, (1,)), (2, 3, (2,)), (2, 4, (2,)), (3, 3, (2, 1))]


# ----- parameters ------------------------------------------------------------

def test_spec_validation():
    s = BetheSpec(3, 4, (2, 1))
    assert [s.kk(m) for m in range(4)] == [4, 2, 1, 0]
    assert s.unknowns() == [root_var(1, 1), root_var(1, 2), root_var(2, 1)]
    with pytest.raises(ValueError):
        BetheSpec(3, 3, (1, 2))
    with pytest.raises(ValueError):
        BetheSpec(2, 2, (0,))
    assert BetheSpec(2, 2, (0,), strict=False).kk(1) == 0


def test_draw_params_are_generic_and_seeded():
    s = draw_params(BetheSpec(3, 4, (2, 1)), seed=7)
    assert s.t == draw_params(BetheSpec(3, 4, (2, 1)), seed=7).t
    t = s.t
    assert all(0.5 <= abs(v) <= 1.5 for v in t)
    assert min(abs(a - c) for i, a in enumerate(t) for c in t[:i]) >= 0.1
    assert all(0.1 <= abs(v) <= 0.9 for v in s.q)
    tw = s.twist()
    assert tw[-1] == 1 and abs(tw[0] / tw[1] - s.q[0]) < 1e-14


# ----- equations -------------------------------------------------------------

@pytest.mark.parametrize("n,N,k", BETHE_CASES + [(3, 4, (2, 1)), (4, 4, (3, 2, 1))])
def test_equation_counts_and_forms(n, N, k):
    spec = BetheSpec(n, N, k)
    frac = bae_generate(spec)
    cleared = bae_generate(spec, "cleared")
    assert len(frac.equations) == sum(k) == len(cleared.equations)
    for eq in cleared.equations:
        assert isinstance(eq.lhs, Poly) and isinstance(eq.rhs, Poly)
    assert beta_zero_check(spec)["status"] == "pass"
    assert qk_form_check(spec)["status"] == "pass"
    assert len(bae_qc(spec)) == sum(k)


def test_two_color_equation_text():
    text = bae_generate(BetheSpec(2, 3, (1,))).render()
    assert text == "(sigma1_1 ⊖ t1) * (sigma1_1 ⊖ t2) * (sigma1_1 ⊖ t3) = q1"


def test_both_forms_vanish_at_a_solution():
    report = solve_seeded(3, 3, (2, 1), seed=3)
    spec = report.spec
    point = report.solutions[0].values(spec)
    moved = dict(point) | {root_var(1, 1): point[root_var(1, 1)] + 0.01}
    for fmt in ("frac", "cleared"):
        for eq in bae_generate(spec, fmt).equations:
            assert abs(eq.lhs.evaluate(point) - eq.rhs.evaluate(point)) < 1e-9
        assert any(abs(eq.lhs.evaluate(moved) - eq.rhs.evaluate(moved)) > 1e-6
                   for eq in bae_generate(spec, fmt).equations)


# ----- eigenvalues -----------------------------------------------------------

def test_vacuum_eigenvalue_symbolic():
    for n in (2, 3):
        spec = BetheSpec(n, 2, (0,) * (n - 1), strict=False)
        lam = top_eigenvalue(spec)(U)
        u = Poly.var(U)
        prod_num = (u - Poly.var(T(1))) * (u - Poly.var(T(2)))
        prod_den = (1 + Poly.var(BETA) * Poly.var(T(1))) * (1 + Poly.var(BETA) * Poly.var(T(2)))
        others = sum((Poly.var(b_var(i)) for i in range(1, n)), Poly.const(0))
        want = RatFunc(Poly.var(b_var(0)) * prod_den + others * prod_num, prod_den)
        assert lam.equals(want)


def test_two_color_single_root_formula():
    spec = BetheSpec(2, 2, (1,))
    lam = top_eigenvalue(spec)(U)
    b0, b1, beta = (sympy.Symbol(n) for n in ("b0", "b1", "beta"))
    u, s, t1, t2 = sympy.symbols("u s t1 t2")

    def om(a, c):
        return (a - c) / (1 + beta * c)

    want = b0 / om(s, u) + om(u, t1) * om(u, t2) / om(u, s) * b1
    names = {sym(b_var(0)): b0, sym(b_var(1)): b1, sym(BETA): beta, sym(U): u,
             sym(root_var(1, 1)): s, sym(T(1)): t1, sym(T(2)): t2}
    got = (to_sympy(lam.num) / to_sympy(lam.den)).subs(names)
    assert sympy.simplify(got - want) == 0


def _contour_residue(f, center, radius=1e-3, points=64):
    zs = center + radius * np.exp(2j * np.pi * np.arange(points) / points)
    vals = np.array([f(z) for z in zs])
    return np.mean(vals * (zs - center))


def test_residue_formula_matches_contour_integral():
    spec = draw_params(BetheSpec(3, 3, (2, 1)), seed=4)
    roots = {1: [0.2 + 0.3j, -0.4 + 0.1j], 2: [0.7 - 0.2j]}
    lam = top_eigenvalue(spec, roots)
    got = residues(spec, roots)
    for a, s in enumerate(roots[1]):
        assert abs(got[a] - _contour_residue(lam, s)) < 1e-8 * max(1, abs(got[a]))
        assert abs(got[a]) > 1e-6


def test_eigenvalue_chain_levels():
    spec = BetheSpec(3, 3, (2, 1))
    chain = eigenvalue_chain(spec)
    assert [e.level for e in chain] == [2, 1, 0]
    assert "b2" in chain[0].formula


def test_degenerate_roots_rejected():
    spec = draw_params(BetheSpec(2, 3, (2,)), seed=1)
    with pytest.raises(DegenerateRoots):
        top_eigenvalue(spec, {1: [0.5, 0.5]})


# ----- numeric solutions -----------------------------------------------------

@pytest.mark.parametrize("n,N,k", BETHE_CASES)
def test_solutions_close_the_ansatz(n, N, k):
    report = solve_seeded(n, N, k, seed=0)
    assert report.solutions
    assert report.max_residual <= 1e-9
    for sol in report.solutions:
        assert max(abs(r) for r in residues(report.spec, sol.roots)) <= 1e-9
        ev = eigenstate_verify(report.spec, sol.roots, samples=3, tol=1e-8)
        assert ev["max_residual"] <= 1e-8
    if n == 2:
        assert len(report.solutions) == comb(N, k[0])


def test_bae_solve_direct_and_json():
    spec = draw_params(BetheSpec(2, 3, (1,)), seed=5)
    rep = bae_solve(spec)
    data = rep.to_json()
    assert data["distinct_solutions"] == len(rep.solutions)
    assert data["max_residual"] <= 1e-9


def test_perturbed_roots_fail_eigen_test():
    report = solve_seeded(3, 3, (2, 1), seed=0)
    sol = report.solutions[0]
    bad = {m: [r + 1e-3 for r in rs] for m, rs in sol.roots.items()}
    with pytest.raises(VerificationFailed):
        eigenstate_verify(report.spec, bad)


def test_nested_state_is_nonzero_and_sized():
    report = solve_seeded(2, 3, (1,), seed=1)
    psi = nested_state(report.spec, report.solutions[0].roots)
    assert psi.norm() > 0
    assert all(sum(w) == 1 for w, _ in psi.items())


def test_eigenstate_size_guard():
    spec = draw_params(BetheSpec(3, 6, (2, 1)), seed=0)
    with pytest.raises(SizeGuardError):
        eigenstate_verify(spec, {1: [0.1, 0.2], 2: [0.3]})


# ----- Whitney relations -----------------------------------------------------

def test_descending_sequences():
    assert sorted(descending_sequences(3)) == sorted([(2, 1), (2,), (1,)])


def test_whitney_sweep_up_to_five():
    rep = whitney_sweep(5)
    assert rep["status"] == "pass"


def test_whitney_qc_presentation():
    rs = whitney_qc(BetheSpec(3, 3, (2, 1)))
    assert rs.checks == {"bae_polynomial": "pass", "vieta": "pass"}
    assert "c(S_2) * c(S_3/S_2) = c(S_3) - q1 * c(S_1)" in rs.presentation
    assert len(rs.relations) == 7


@pytest.mark.parametrize("beta", ["sym", -1])
def test_whitney_qk_checks(beta):
    rs = whitney_qk(BetheSpec(3, 4, (2, 1)), beta=beta)
    assert set(rs.checks.values()) == {"pass"}


# ----- Givental-Kim ----------------------------------------------------------

def test_givental_kim_small():
    x1, x2, x3 = (Poly.var(X(i)) for i in (1, 2, 3))
    q1, q2 = Poly.var(q_var(1)), Poly.var(q_var(2))
    assert givental_kim(2) == [x1 + x2, x1 * x2 + q1]
    assert givental_kim(3)[2] == x1 * x2 * x3 + x1 * q2 + x3 * q1


@pytest.mark.parametrize("N", range(1, 7))
def test_givental_kim_classical_limit(N):
    zero = {q_var(i): Poly.const(0) for i in range(1, N)}
    xs = X.take(N)
    for i, E in enumerate(givental_kim(N), 1):
        assert E.subs(zero) == elementary_symmetric(xs, i)


def test_givental_kim_matches_sympy_determinant():
    N = 4
    lam = sympy.Symbol("lam")
    G = gamma_matrix(N)
    M = sympy.eye(N) + lam * sympy.Matrix([[to_sympy(Poly.coerce(c)) for c in row] for row in G])
    det = sympy.Poly(sympy.expand(M.det()), lam)
    for i, E in enumerate(givental_kim(N), 1):
        assert sympy.expand(det.coeff_monomial(lam ** i) - to_sympy(E)) == 0


# ----- complete-flag identification ------------------------------------------

@pytest.mark.parametrize("N", [2, 3, 4])
def test_thm2(N):
    rep = thm2_verify(N)
    assert rep["matched"] == len(all_perms(N))


def test_thm2_base_case():
    state = complete_flag_state(2)
    amps = {tuple(w): c for w, c in state.items()}
    assert set(amps) == {(1, 0), (0, 1)}
    num, den = identify(amps[(0, 1)], [(flag_roots(2, 1), X.take(1))])
    assert num == groth_value(Perm([2, 1])) * den


def test_thm2_wrong_identification_fails():
    state = complete_flag_state(3)
    groups = [(flag_roots(3, s), X.take(3 - s)) for s in (1, 2)]
    coeff = state[bytes((0, 1, 2))]
    num, den = identify(coeff, groups)
    assert num == groth_value(Perm([3, 2, 1])) * den
    assert num != groth_value(Perm([3, 1, 2])) * den
    # swapping which x-block the level-2 roots map to breaks the match
    wrong = [(flag_roots(3, 1), X.take(2)), (flag_roots(3, 2), [X(2)])]
    num2, den2 = identify(coeff, wrong)
    assert num2 != groth_value(Perm([3, 2, 1])) * den2


def test_thm2_size_guard():
    with pytest.raises(SizeGuardError):
        thm2_verify(5)


@pytest.mark.parametrize("pi", all_perms(3))
def test_lemma7(pi):
    assert lemma7_check(pi)["status"] == "pass"


def test_lemma7_worked_example():
    assert lemma7_check(Perm([3, 2, 1]))["value"] == "(x1 ⊖ t1)*(x1 ⊖ t2)*(x2 ⊖ t1)"


def test_nested_symbolic_state_two_colors():
    state = nested_symbolic_state(BetheSpec(2, 2, (1,)))
    assert len(list(state.items())) == 2


def test_partial_flag_report_is_exploratory():
    rep = partial_flag_report(BetheSpec(2, 3, (1,)))
    assert rep["status"] == "report"
    assert {e["ket"] for e in rep["kets"]} == {"001", "010", "100"}
    assert all(e["block_symmetric"] for e in rep["kets"])
