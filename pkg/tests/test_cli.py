import json
import subprocess
import sys

import pytest

import fivevertex.vertex
from fivevertex.cli import main
from fivevertex.errors import IdentityFailed, NoConvergence


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ybe_text(capsys):
    code, out, _ = run(capsys, "ybe", "--n", "3")
    assert code == 0
    assert out.strip() == "PASS symbolic YBE n=3 (729 entries)"


def test_groth_text_and_latex(capsys):
    assert run(capsys, "groth", "--perm", "2", "1", "3")[1].strip() == "G^beta_213 = (x1 ⊖ t1)"
    code, out, _ = run(capsys, "groth", "--perm", "2", "1", "3", "--format", "latex")
    assert code == 0
    assert out.strip() == r"\mathcal{G}^{(\beta)}_{213} = (x_{1} \ominus t_{1})"


def test_bstate_reproduces_worked_example(capsys):
    code, out, _ = run(capsys, "bstate", "--colors", "2", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == [
        "|012⟩: (s1 ⊖ t1)*(s1 ⊖ t2)*(s2 ⊖ t1)",
        "|021⟩: (s1 ⊖ t1)*(s2 ⊖ t1)",
        "|102⟩: (s1 ⊖ t1)*(s1 ⊖ t2)",
        "|120⟩: (s1 ⊖ t1)",
        "|201⟩: (s1 ⊖ t1) + (s2 ⊖ t2) + beta*(s1 ⊖ t1)*(s2 ⊖ t2)",
        "|210⟩: 1",
    ]
    code, out, _ = run(capsys, "bstate", "--colors", "1", "2")
    assert len(out.strip().splitlines()) == 3
    assert "|120⟩: 1 + beta*(s1 ⊖ t1)" in out


def test_json_output_parses(capsys):
    code, out, _ = run(capsys, "bstate", "--colors", "1", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["N"] == 3 and len(data["terms"]) == 3
    code, out, _ = run(capsys, "gk", "--N", "2", "--format", "json")
    assert code == 0 and json.loads(out)


def test_bae_and_whitney(capsys):
    assert run(capsys, "bae", "--N", "3", "--k", "1")[1].strip() == \
        "(sigma1_1 ⊖ t1) * (sigma1_1 ⊖ t2) * (sigma1_1 ⊖ t3) = q1"
    code, out, _ = run(capsys, "bae", "--N", "3", "--k", "2", "1", "--check")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "whitney", "--N", "3", "--k", "2", "1")
    assert code == 0 and "sigma2_1*eta2_1 = sigma1_1*sigma1_2 - q2" in out
    code, out, _ = run(capsys, "whitney", "--N", "3", "--k", "2", "1", "--flavor", "qk")
    assert code == 0


def test_solve_is_deterministic(capsys):
    first = run(capsys, "solve", "--N", "3", "--k", "1", "--seed", "4", "--format", "json")
    second = run(capsys, "solve", "--N", "3", "--k", "1", "--seed", "4", "--format", "json")
    assert first[0] == 0 and first[1] == second[1]


def test_verify_suite_json_is_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "gk", "--format", "json")
    b = run(capsys, "verify", "--suite", "gk", "--format", "json")
    assert a[0] == 0 and a[1] == b[1]
    assert all(item["status"] == "pass" for item in json.loads(a[1]))


@pytest.mark.parametrize("argv", [
    ["ybe", "--n", "1"],
    ["groth", "--perm", "2", "2"],
    ["bae", "--N", "3", "--k", "1", "2"],
    ["nonsense"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_identity_failure_exits_1(capsys, monkeypatch):
    def broken(*a, **k):
        raise IdentityFailed("forced", witness=None)

    monkeypatch.setattr(fivevertex.vertex, "ybe_check", broken)
    code, _, err = run(capsys, "ybe", "--n", "2")
    assert code == 1 and "FAIL" in err


def test_arithmetic_failure_exits_3(capsys, monkeypatch):
    def broken(*a, **k):
        raise NoConvergence("forced")

    monkeypatch.setattr(fivevertex.vertex, "ybe_check", broken)
    assert run(capsys, "ybe", "--n", "2")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fivevertex", "gk", "--N", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["E^2_1 = x1 + x2", "E^2_2 = x1*x2 + q1"]
