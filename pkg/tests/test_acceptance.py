"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its runtime.  Run
directly (``python3 tests/test_acceptance.py``) for the same lines without
pytest.
"""

import random
import sys
import time
from pathlib import Path

import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from conftest import double_schubert_table, sym, to_sympy  # noqa: E402
from fivevertex.algebra import Poly, elementary_symmetric  # noqa: E402
from fivevertex.algebra.variables import BETA, MIDDLE, X, Z  # noqa: E402
from fivevertex.bethe import (  # noqa: E402
    BetheSpec, beta_zero_check, descending_sequences, givental_kim, lemma7_check, thm2_verify,
    whitney_qc, whitney_qk,
)
from fivevertex.bethe.spec import q_var  # noqa: E402
from fivevertex.groth import (  # noqa: E402
    Perm, all_perms, apply_word, beta_divdiff, cauchy_check, compose, groth, groth_value, interpolate,
    interpolation_sum, specialize_family,
)
from fivevertex.groth.polynomials import swap_alphabets  # noqa: E402
from fivevertex.verify import numeric_bethe, random_module_member  # noqa: E402
from fivevertex.vertex import bstate_expand, support_identities_check, thm1_check, ybe_check  # noqa: E402

B = Poly.var(BETA)


def _line(num, title, ok, seconds, detail=""):
    status = "PASS" if ok else "FAIL"
    extra = f" [{detail}]" if detail else ""
    return f"{status} criterion {num:>2}: {title} ({seconds:.1f}s){extra}"


@pytest.fixture
def announce(capsys):
    def run(num, title, fn, budget=None):
        start = time.perf_counter()
        try:
            detail = fn()
        except Exception as exc:
            with capsys.disabled():
                print("\n" + _line(num, title, False, time.perf_counter() - start, repr(exc)[:200]))
            raise
        seconds = time.perf_counter() - start
        ok = budget is None or seconds < budget
        with capsys.disabled():
            note = detail or ""
            if not ok:
                note = f"{note}; over the {budget}s budget".lstrip("; ")
            print("\n" + _line(num, title, ok, seconds, note))
        assert ok, f"criterion {num} took {seconds:.1f}s, budget {budget}s"
    return run


# ----- the criteria ----------------------------------------------------------

def criterion_1():
    for n in (2, 3, 4):
        assert ybe_check(n)["status"] == "pass"
    for n in (2, 3):
        assert set(support_identities_check(n)["results"].values()) == {"pass"}
    return "YBE n=2,3,4; support identities n=2,3"


def _oat(i, j):
    a, z = Poly.var(MIDDLE(i)), Poly.var(Z(j))
    return a + z + B * a * z


def criterion_2():
    a11, a12, a21, a22 = _oat(1, 1), _oat(1, 2), _oat(2, 1), _oat(2, 2)
    ops = [(2, Poly.var(MIDDLE(1))), (1, Poly.var(MIDDLE(2)))]
    perms, others = bstate_expand(ops, 3)
    got = {w.apply_to_word(): c for w, c in perms.items()}
    assert not others
    assert got == {
        (2, 1, 0): Poly.const(1), (1, 2, 0): a11, (2, 0, 1): a11 + a22 + B * a11 * a22,
        (1, 0, 2): a11 * a12, (0, 2, 1): a11 * a21, (0, 1, 2): a11 * a12 * a21,
    }
    perms, others = bstate_expand([(1, ops[0][1]), (2, ops[1][1])], 3)
    got = {w.apply_to_word(): c for w, c in perms.items() if c}
    assert not others
    assert got == {
        (1, 2, 0): 1 + B * a11,
        (1, 0, 2): a21 * (1 + B * a12) + a12 * (1 + B * a11),
        (0, 1, 2): a11 * a21 * (1 + B * a12),
    }
    to_mid = {X(i): MIDDLE(i) for i in (1, 2, 3)}

    def dbar(w):
        return beta_divdiff(groth_value(Perm(w)), 1, "bar").rename(to_mid)

    assert dbar([2, 1, 3]) == 1 + B * a11
    assert dbar([3, 2, 1]) == a11 * a21 * (1 + B * a12)
    assert dbar([3, 1, 2]) == a21 * (1 + B * a12) + a12 * (1 + B * a11)
    assert all(dbar(w).is_zero() for w in ([2, 3, 1], [1, 3, 2], [1, 2, 3]))
    return "6 + 3 coefficients, 5 dbar evaluations"


def criterion_3():
    for N in (3, 4):
        assert thm1_check(N)["matched"] == len(all_perms(N))
    omega = Perm.longest(3)
    perms, _ = bstate_expand([(2, Poly.var(MIDDLE(1))), (1, Poly.var(MIDDLE(2)))], 3)
    for w in all_perms(3):
        assert perms[compose(omega, w.inverse())] == groth_value(w).rename({X(1): MIDDLE(1), X(2): MIDDLE(2)})
    return "6 and 24 cases"


def _reduced_words(w):
    if w.is_identity():
        return [()]
    return [(i,) + r for i in w.left_descents() for r in _reduced_words(Perm.simple(i, w.N) * w)]


def criterion_4():
    N = 4
    omega = Perm.longest(N)
    top = groth_value(omega)
    words = 0
    for w in all_perms(N):
        ws = _reduced_words(w.inverse() * omega)
        words += len(ws)
        assert {apply_word(top, word) for word in ws} == {groth_value(w)}
        assert swap_alphabets(groth_value(w), X, Z, N) == groth_value(w.inverse())
    rng = random.Random(0)
    for _ in range(50):
        f = Poly.const(0)
        for _ in range(4):
            m = Poly.const(rng.randint(-3, 3)) * B ** rng.randint(0, 1)
            for i in range(1, N + 1):
                m = m * Poly.var(X(i)) ** rng.randint(0, 3)
            f = f + m
        i = rng.randint(1, N - 1)
        d = beta_divdiff(f, i)
        assert beta_divdiff(d, i) == -B * d
        db = beta_divdiff(f, i, "bar")
        assert beta_divdiff(db, i, "bar") == B * db
        for variant in ("plain", "bar"):
            for j in (1, 2):
                assert apply_word(f, (j, j + 1, j), variant) == apply_word(f, (j + 1, j, j + 1), variant)
            assert apply_word(f, (1, 3), variant) == apply_word(f, (3, 1), variant)
    return f"{words} reduced words, 50 random polynomials, switch symmetry on S4"


def criterion_5():
    for w in all_perms(3):
        assert cauchy_check(w)["status"] == "pass"
    rng = random.Random(0)
    for _ in range(20):
        F = random_module_member(3, rng)
        assert interpolation_sum(interpolate(F, 3), 3) == F
    return "Cauchy on S3, 20 interpolation round trips"


def criterion_6():
    types = 0
    for N in range(2, 6):
        for k in descending_sequences(N):
            spec = BetheSpec(len(k) + 1, N, k)
            assert set(whitney_qc(spec).checks.values()) == {"pass"}
            assert set(whitney_qk(spec).checks.values()) == {"pass"}
            assert beta_zero_check(spec)["status"] == "pass"
            types += 1
    return f"{types} flag types with N <= 5"


def criterion_7():
    x1, x2 = Poly.var(X(1)), Poly.var(X(2))
    assert givental_kim(2) == [x1 + x2, x1 * x2 + Poly.var(q_var(1))]
    for N in range(1, 7):
        zero = {q_var(i): Poly.const(0) for i in range(1, N)}
        for i, E in enumerate(givental_kim(N), 1):
            assert E.subs(zero) == elementary_symmetric(X.take(N), i)
    return "N=2 explicit, q->0 for N <= 6"


BETHE_CASES = [(2, 2, (1,)), (2, 3, (1,)), (2, 3, (2,)), (2, 4, (2,)), (3, 3, (2, 1))]


def criterion_8():
    worst = [0.0, 0.0, 0.0]
    for n, N, k in BETHE_CASES:
        rep = numeric_bethe(n, N, k, seed=0, tol=1e-9, samples=3, eig_tol=1e-8)
        assert rep["solutions"] > 0
        assert rep["max_residual"] <= 1e-9
        assert rep["max_residue"] <= 1e-9
        assert rep["max_eigen_residual"] <= 1e-8
        worst = [max(a, rep[key]) for a, key in zip(worst, ("max_residual", "max_residue", "max_eigen_residual"))]
    return "max residual {:.1e}, residue {:.1e}, eigen {:.1e}".format(*worst)


def criterion_9():
    for N in (2, 3, 4):
        assert thm2_verify(N)["matched"] == len(all_perms(N))
    assert lemma7_check(Perm([3, 2, 1]))["value"] == "(x1 ⊖ t1)*(x1 ⊖ t2)*(x2 ⊖ t1)"
    return "N=2,3,4 and the worked example"


def criterion_10():
    table, xs, ys = double_schubert_table(4)
    names = {sym(X(i)): xs[i - 1] for i in range(1, 5)} | {sym(Z(j)): -ys[j - 1] for j in range(1, 5)}
    for w in all_perms(4):
        g0 = specialize_family(groth(w), 0)
        if not w.is_identity():
            assert g0.is_homogeneous() and g0.total_degree() == w.length()
        assert sympy.expand(to_sympy(g0).subs(names, simultaneous=True) - table[w.oneline]) == 0
    return "24 permutations"


CRITERIA = [
    (1, "symbolic Yang-Baxter equation and support identities", criterion_1, 60),
    (2, "worked N=3 Bethe-vector example", criterion_2, None),
    (3, "B-string coefficients are Grothendieck polynomials (N=3,4)", criterion_3, 120),
    (4, "divided-difference calculus on S4", criterion_4, None),
    (5, "Cauchy identity and interpolation", criterion_5, None),
    (6, "Whitney relations from Vieta, N <= 5", criterion_6, None),
    (7, "Givental-Kim determinant", criterion_7, None),
    (8, "numeric Bethe closure", criterion_8, 60),
    (9, "nested Bethe state in symmetric form (N=2,3,4)", criterion_9, None),
    (10, "beta=0 specialization against double Schubert", criterion_10, None),
]


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(announce, num, title, fn, budget):
    announce(num, title, fn, budget)


if __name__ == "__main__":
    failures = 0
    for num, title, fn, budget in CRITERIA:
        start = time.perf_counter()
        try:
            detail = fn()
            seconds = time.perf_counter() - start
            ok = budget is None or seconds < budget
        except Exception as exc:
            detail, seconds, ok = repr(exc)[:200], time.perf_counter() - start, False
        failures += not ok
        print(_line(num, title, ok, seconds, detail))
    sys.exit(1 if failures else 0)
