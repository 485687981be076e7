import io
import subprocess
import sys
from pathlib import Path

import pytest

from roughring.cli import COMMANDS, main, run

HERE = Path(__file__).parent
EX21 = str(HERE / "fixtures" / "example21.rr")
Z6 = str(HERE / "fixtures" / "z6.rr")
GOLDEN = HERE / "golden"


def keys(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line and not line.startswith(" "))


@pytest.mark.parametrize("argv, golden", [
    (["approx", EX21, "--map", "F", "--set", "A"], "approx_example21.txt"),
    (["fundamental", Z6, "--svh", "G"], "fundamental_z6.txt"),
    (["laws", "--law", "P42-mul"], "laws_p42_mul.txt"),
])
def test_golden_bytes(argv, golden):
    text, _ = run(argv)
    assert text.encode("utf-8") == (GOLDEN / golden).read_bytes()


def test_approx_keys():
    text, code = run(["approx", EX21, "--map", "F", "--set", "B"])
    k = keys(text)
    assert code == 0 and k["format"] == "1"
    assert (k["lower"], k["upper"], k["boundary"], k["rough"]) == ("{4}", "{3 4 5 6}", "{3 5 6}", "yes")
    assert k["lower_definition"] == "{x : F(x) ⊆ A}"


@pytest.mark.parametrize("argv, code", [
    (["approx", EX21, "--map", "F", "--set", "A"], 0),
    (["invert", EX21, "--map", "F"], 0),
    (["psring", "--size", "3"], 0),
    (["ring", Z6, "--ring", "Z6"], 0),
    (["quotient", Z6, "--ring", "Z6", "--ideal", "E"], 0),
    (["quotient", Z6, "--ring", "Z4", "--partition", "Q"], 0),
    (["iso", Z6, "--ring", "Z3", "--other", "Z3"], 0),
    (["iso", Z6, "--ring", "Z3", "--other", "Z4"], 1),
    (["svh", Z6, "--svh", "G"], 0),
    (["svh", Z6, "--svh", "H"], 1),
    (["kernel", Z6, "--svh", "G3"], 0),
    (["kernel", Z6, "--svh", "H"], 1),
    (["fundamental", Z6, "--svh", "S"], 0),
    (["fundamental", Z6, "--svh", "H"], 1),
    (["laws", "--law", "P21-1"], 0),
    (["laws", "--law", "P42-mul"], 1),
    (["errata", "--scope", "EX21"], 0),
    (["errata", "--scope", "EX31"], 1),
    # usage and input errors
    ([], 2),
    (["frobnicate"], 2),
    (["approx", EX21, "--map", "F"], 2),
    (["approx", EX21, "--map", "F", "--set", "Nope"], 2),
    (["approx", EX21, "--map", "A", "--set", "A"], 2),
    (["approx", str(HERE / "missing.rr"), "--map", "F", "--set", "A"], 2),
    (["laws", "--law", "P99-9"], 2),
    (["quotient", Z6, "--ring", "Z6"], 2),
    (["psring"], 2),
    (["psring", "--size", "5"], 2),
])
def test_exit_codes(argv, code):
    assert run(argv)[1] == code


def test_every_command_has_a_case():
    assert set(COMMANDS) == {"approx", "invert", "psring", "ring", "quotient", "iso", "svh", "kernel",
                             "induced", "fundamental", "laws", "errata"}


def test_induced(tmp_path):
    doc = tmp_path / "ind.rr"
    doc.write_text("ring Z6: zmod 6\nring Z3: zmod 3\nring Z4: zmod 4\nring Z2: zmod 2\n"
                   "hom rho: Z6 -> Z3 = 0:0 1:1 2:2 3:0 4:1 5:2\n"
                   "hom pi: Z4 -> Z2 = 0:0 1:1 2:0 3:1\n"
                   "ideal Z: Z3 = 0\nideal Y: Z2 = 0\n"
                   "svh F2: classes Z3 Z\nsvh G2: classes Z2 Y\nset A: Z6 = 1 2\n")
    text, code = run(["induced", str(doc), "--hom", "rho", "--svh", "F2"])
    k = keys(text)
    assert code == 0 and k["upper_pullback_failures"] == "0" and k["induced_powerful"] == "yes"
    text, code = run(["induced", str(doc), "--hom", "rho", "--svh", "F2", "--set", "A"])
    assert code == 0 and keys(text)["upper_pullback_checked"] == "1"
    # non-injective reduction: the pullback is not powerful
    text, code = run(["induced", str(doc), "--hom", "pi", "--svh", "G2"])
    assert code == 1 and keys(text)["induced_powerful"] == "no"


def test_kernel_reports_both_readings():
    k = keys(run(["kernel", Z6, "--svh", "G"])[0])
    assert k["kernel"] == "{0 2 4}" and k["kernel_subring"] == "yes"
    assert k["kernel_at_one"] == "{1 3 5} (non-default)" and k["kernel_at_one_subring"].startswith("no")


def test_quotient_by_non_ideal_subgroup(tmp_path):
    doc = tmp_path / "p.rr"
    doc.write_text("ring Z2: zmod 2\nring P: product Z2 Z2\nset D: P = (0,0) (1,1)\n")
    text, code = run(["quotient", str(doc), "--ring", "P", "--subgroup", "D"])
    assert code == 1 and keys(text)["multiplication_well_defined"] == "no"


def test_stdin_document(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("universe X: a b\nmap F: X -> X\n  a: a b\n  b: b\nset A: X = b\n"))
    assert main(["approx", "-", "--map", "F", "--set", "A"]) == 0
    out = capsys.readouterr().out
    assert "lower: {b}" in out and "upper: {a b}" in out


def test_errors_go_to_stderr(capsys):
    assert main(["laws", "--law", "nope"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and captured.err.startswith("error: unknown law")


def test_parse_error_line_number(tmp_path):
    doc = tmp_path / "bad.rr"
    doc.write_text("universe X: a\nring R: zmod 0\n")
    text, code = run(["ring", str(doc), "--ring", "R"])
    assert code == 2 and text == "error: line 2: zmod needs n >= 1\n"


def test_module_entry_point_is_byte_stable():
    argv = [sys.executable, "-m", "roughring", "approx", EX21, "--map", "F", "--set", "A"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second == (GOLDEN / "approx_example21.txt").read_bytes()
