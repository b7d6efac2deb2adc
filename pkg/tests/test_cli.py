import json
import subprocess
import sys

import pytest

from psiring.cli import main, run


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv, "--json")
    return code, json.loads(out)


def test_extalg_psi_json(capsys):
    code, data = call_json(capsys, "extalg", "psi", "--n", "2", "--nprime", "4")
    assert code == 0
    assert data["free_rank"] == 1 and data["torsion"] == [12]


def test_extalg_lambda_text(capsys):
    code, out, _ = call(capsys, "extalg", "lambda", "--n", "3", "--nprime", "6")
    assert code == 0 and "2Z ⊕ Z_2" in out


def test_stable(capsys):
    code, out, _ = call(capsys, "stable", "--kmax", "8")
    assert code == 0
    for t in ("Z_2", "Z_24", "Z_240", "Z_504", "Z_480"):
        assert t in out
    code, rows = call_json(capsys, "stable", "--kmax", "8")
    assert [r["torsion"] for r in rows] == [[2], [24], [2], [240], [2], [504], [2], [480]]
    assert {r["free_part"] for r in rows} == {"2Z"}


def test_hopf(capsys):
    assert call(capsys, "hopf", "adams", "--a", "2", "--nmax", "100")[1].strip() == "1 2 4"
    code, data = call_json(capsys, "hopf", "feasible", "--n", "3", "--nprime", "6")
    assert code == 0 and data["feasible"] is False


def test_gn_and_gpj(capsys):
    code, data = call_json(capsys, "gn", "--n", "2", "--nprime", "4", "--brute", "--lmax", "100")
    assert data["value"] == data["brute"] == 12
    code, data = call_json(capsys, "gpj", "--p", "2", "--j", "8", "--brute")
    assert data["value"] == 5


def test_poly(capsys):
    assert call(capsys, "poly", "universal-pij", "--i", "2", "--j", "2")[1].strip() == "r1*r3 - r4"
    code, data = call_json(capsys, "poly", "universal-p", "--i", "2")
    assert data["poly"] == "r1^2*s2 + r2*s1^2 - 2*r2*s2"


def test_ring(capsys):
    assert call(capsys, "ring", "apply-psi", "--k", "5", "--expr", "a1*b2 + 7")[1].strip() == "a5*b10 + 7"
    code, data = call_json(capsys, "ring", "check-special", "--ring", "free")
    assert code == 2
    assert data["witness"]["p"] == 2
    assert call(capsys, "ring", "check-special", "--ring", "sphere:4")[0] == 0


def test_newton(capsys):
    code, data = call_json(capsys, "newton", "lambda-from-psi", "--i", "2", "--ring", "z", "--elem", "5")
    assert code == 0 and data["lambda"] == "10"
    code, out, _ = call(capsys, "newton", "lambda-from-psi", "--i", "2", "--ring", "sphere:3", "--elem", "1,1")
    assert code == 0 and out.strip().endswith("= -3*y")
    code, out, _ = call(capsys, "newton", "lambda-from-psi", "--i", "2", "--ring", "sphere:1", "--elem", "2 + y")
    assert code == 0 and out.strip().endswith("= 1 + y")
    code, data = call_json(capsys, "newton", "lambda-from-psi", "--i", "2", "--ring", "free", "--elem", "a1")
    assert code == 2 and data["non_integral"]["divisor"] == 2


def test_lab(capsys):
    code, data = call_json(capsys, "lab", "verify", "--n", "1", "--nprime", "2", "--h", "1", "--nu2", "1", "--kmax", "8", "--special")
    assert code == 0 and data["ok"]
    code, data = call_json(capsys, "lab", "verify", "--n", "1", "--nprime", "2", "--h", "0", "--nu2", "1", "--kmax", "8", "--special")
    assert code == 2 and data["special"]["p"] == 2
    code, data = call_json(capsys, "lab", "verify", "--n", "3", "--nprime", "6", "--h", "0", "--nu2", "1", "--kmax", "8")
    assert code == 2 and data["admissible"] is False
    code, data = call_json(capsys, "lab", "enumerate", "--n", "2", "--nprime", "4", "--h", "0,1", "--kmax", "8", "--special")
    assert code == 0 and data["G"] == 12
    assert {tuple(c) for c in data["classes"]} == {(h, z) for h in (0, 1) for z in range(12) if (h - z) % 2 == 0}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["extalg", "phi", "--n", "1", "--nprime", "2"],
        ["extalg", "psi", "--n", "1"],
        ["gn", "--n", "x", "--nprime", "2"],
        ["gpj", "--p", "4", "--j", "2"],
        ["ring", "apply-psi", "--k", "2", "--expr", "a0"],
        ["ring", "check-special", "--ring", "torus"],
        ["lab", "verify", "--n", "2", "--nprime", "2", "--h", "0", "--nu2", "0", "--kmax", "4"],
        ["stable", "--kmax", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 1
    assert err


def test_envelope_echoes_command():
    env = run(["gn", "--n", "1", "--nprime", "2"])
    assert env.command == ["gn", "--n", "1", "--nprime", "2"]
    assert env.status == 0 and env.payload["value"] == 2


def test_deterministic(capsys):
    first = call(capsys, "lab", "enumerate", "--n", "1", "--nprime", "3", "--h", "0:2")
    second = call(capsys, "lab", "enumerate", "--n", "1", "--nprime", "3", "--h", "0:2")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "psiring", "hopf", "adams", "--a", "2", "--nmax", "20"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1 2 4"
