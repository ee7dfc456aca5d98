import json
import subprocess
import sys

import pytest

from hopfoid.cli import main, parse_weyl
from hopfoid.algebra.unipoly import UniPoly
from hopfoid.weyl import Y, WEYL


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_weyl_mul(capsys):
    assert run(capsys, "weyl-mul", "x", "Y") == (0, "Y*x + 1", "")
    code, out, _ = run(capsys, "weyl-mul", "Y^2 + x", "Y*x", "--format", "json")
    assert json.loads(out)["product"] == "Y^3*x + Y*x^2 + x"


def test_weyl_input_is_normal_form():
    u = Y ** 3 * WEYL.coeff(UniPoly(["1/2"])) - Y * WEYL.coeff(UniPoly([0, 1]))
    assert parse_weyl(str(u)) == u


def test_jet_coproduct(capsys):
    assert run(capsys, "jet-coproduct", "--n", "3")[:2] == (0, "y3⊗y1 + 3*y1*y2⊗y2 + y1^3⊗y3")
    assert run(capsys, "jet-antipode", "--n", "2")[:2] == (0, "-y1^-3*y2")


def test_dual_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "dual-eq", "--class", "0, x; 0, 0 | 1, 0 | 1, 0", "--class", "0 | 1 | 1")
    assert (code, out) == (0, "equal (saturation rank 1)")
    code, out, _ = run(capsys, "dual-eq", "--class", "0, x; 0, 0 | 1, 0 | 0, 1", "--class", "0 | x^2 | 1")
    assert (code, out) == (1, "not equal (witness Y^0)")
    code, out, _ = run(capsys, "dual-eq", "--class",
                       "0, x; 0, 0 | 1, 0 | 0, 1", "--class", "0, 0, 0; 0, 0, x; 0, 0, 0 | 1/2*x^2, -1, 0 | 1, 1/2*x^2, 0")
    assert code == 0


def test_class_file_input(capsys, tmp_path):
    from hopfoid.finite_dual import basis_class
    from hopfoid.diffmod import DiffModule
    from hopfoid.serialize import class_to_json, dumps
    p = tmp_path / "c.json"
    p.write_text(dumps(class_to_json(basis_class(DiffModule([[UniPoly([0, 1])]]), 0, 0))))
    code, out, _ = run(capsys, "dual-zeta", "--file", str(p), "--n", "2")
    assert code == 0 and out.splitlines() == ["zeta(Y^0) = 1", "zeta(Y^1) = -x", "zeta(Y^2) = x^2 - 1"]


def test_module_verbs(capsys):
    assert run(capsys, "mod-dual", "-m", "0, x; 0, 0")[:2] == (0, "[[0, 0], [-x, 0]]")
    assert run(capsys, "mod-tensor", "-m", "x", "-m", "1")[:2] == (0, "[[x + 1]]")
    code, out, _ = run(capsys, "mod-solve", "-m", "0, x; 0, 0", "--bound", "3")
    assert code == 0 and out.startswith("2 polynomial solution(s)")
    code, out, _ = run(capsys, "mod-taylor", "--expr", "x", "--delta", "x", "--order", "3")
    assert out.splitlines() == ["Z^0: x", "Z^1: x", "Z^2: 1/2*x", "Z^3: 1/6*x"]


def test_galois_and_pv(capsys):
    assert run(capsys, "galois-antipode-check", "-m", "1, x; 2, 0")[0] == 0
    assert run(capsys, "galois-det", "-m", "x, 1; 0, 1")[0] == 0
    code, out, _ = run(capsys, "galois-gen", "-m", "0, x; 0, 0", "--index", "1,2")
    assert "Delta(u12) = u12⊗u11 + u22⊗u12" in out
    assert run(capsys, "pv-derive", "-m", "x", "--expr", "X11")[:2] == (0, "x*X11")
    code, out, _ = run(capsys, "pv-report", "-m", "0, 2*x; 0, 0", "--order", "2")
    assert code == 0 and "trivial isotropy group" in out


def test_truncation_env(capsys, monkeypatch):
    monkeypatch.setenv("HOPFOID_TRUNC", "2")
    code, out, _ = run(capsys, "pv-fundamental", "-m", "1")
    assert code == 0 and out.splitlines()[:3] == ["Z^0: [1]", "Z^1: [1]", "Z^2: [1/2]"]
    monkeypatch.setenv("HOPFOID_TRUNC", "zero")
    assert run(capsys, "pv-fundamental", "-m", "1")[0] == 2


def test_usage_errors(capsys):
    code, _, err = run(capsys, "jet-coproduct", "--expr", "x^-1")
    assert code == 2 and "column 2" in err
    assert run(capsys, "mod-dual", "-m", "0, x; 0")[0] == 2
    assert run(capsys, "dual-eq", "--class", "0 | 1 | 1")[0] == 2
    assert run(capsys, "jet-coproduct", "--n", "9", "--r", "6")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-verb"])
    assert e.value.code == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "hopfoid.cli", "jet-coproduct", "--n", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "y2⊗y1 + y1^2⊗y2"


def test_suite_subset(capsys):
    code, out, _ = run(capsys, "suite", "--only", "1,11")
    assert code == 0 and out.splitlines()[-1] == "2/2 criteria passed"
