import json
import subprocess
import sys

import pytest

from galoisweyl.cli import main, parse_group
from galoisweyl.groups import GroupDescriptor


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_weyl(capsys):
    code, out, _ = run(capsys, "eval", "--weyl", "n=1", "--expr", "d1*x1")
    assert code == 0 and out.strip() == "x1*d1 + 1"


def test_eval_embed(capsys):
    code, out, _ = run(capsys, "eval", "--weyl", "n=1", "--expr", "d1", "--embed")
    assert code == 0
    assert "embedding: t1*E(-1)" in out and "support: {-1}" in out


def test_eval_gwa(capsys):
    code, out, _ = run(capsys, "eval", "--gwa", "uqsl2", "--expr", "Xp1*Xm1")
    assert code == 0
    assert out.strip() == "((q^3/(q^4 - 2*q^2 + 1))*h^4 + c*h^2 + (q/(q^4 - 2*q^2 + 1)))/h^2"


def test_eval_error_exit(capsys):
    code, _, err = run(capsys, "eval", "--weyl", "n=1", "--expr", "X1")
    assert code == 2
    assert "negative exponent requires localized algebra" in err


def test_gwa_instance(capsys):
    code, out, _ = run(capsys, "gwa", "instance", "cyclic_invariant", "--m", "2", "--n", "1")
    assert code == 0
    assert "a1 = 4*H1^2 + 2*H1" in out
    assert "fail" not in out


def test_group_commands(capsys):
    code, out, _ = run(capsys, "group", "enumerate", "--m", "2", "--p", "2", "--n", "2")
    assert code == 0 and out.startswith("G(2,2,2): order 4")
    code, out, _ = run(capsys, "group", "quotient", "--m", "2", "--p", "2", "--n", "2",
                       "--element", "[1,0; (1 2)]")
    assert code == 0 and out.strip() == "[1,0; (1 2)] -> 1 mod 2"


def test_invariants_commands(capsys):
    assert run(capsys, "invariants", "reynolds", "--group", "S2", "--expr", "x1")[1].strip() \
        == "1/2*x1 + 1/2*x2"
    code, out, _ = run(capsys, "invariants", "check", "--group", "S2", "--expr", "x1")
    assert code == 1 and "(1 2)" in out
    assert run(capsys, "invariants", "gamma", "--group", "S2")[1].split("\n")[:2] == ["t1 + t2", "t1*t2"]


def test_galois_support(capsys):
    assert run(capsys, "invariants", "galois-support", "--vectors", "1,0;0,1")[0] == 1
    assert run(capsys, "invariants", "galois-support", "--weyl", "2")[0] == 0
    assert run(capsys, "invariants", "galois-support", "--invariant", "3,2")[0] == 0


def test_decompose_counterexample(capsys):
    code, out, _ = run(capsys, "invariants", "decompose", "--m", "2", "--p", "2", "--n", "2",
                       "--expr", "d1*d2")
    assert code == 1
    assert "x1^-1*x2^-1*d1*d2" in out


def test_suite_list(capsys):
    code, out, _ = run(capsys, "suite", "list")
    assert code == 0 and len(out.strip().splitlines()) == 10


def test_suite_errors(capsys):
    assert run(capsys, "suite", "run", "nope")[0] == 2
    assert run(capsys, "suite", "run", "weyl-embed", "--param", "n=9")[0] == 2


def test_suite_json_is_deterministic(capsys):
    argv = ("suite", "run", "galois-support", "--seed", "4", "--json")
    code, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert code == 0 and a == b
    data = json.loads(a)
    assert data["suite"] == "galois-support" and data["summary"]["fail"] == 0


def test_json_flag_position(capsys):
    a = run(capsys, "--json", "eval", "--weyl", "n=1", "--expr", "d1*x1")[1]
    b = run(capsys, "eval", "--json", "--weyl", "n=1", "--expr", "d1*x1")[1]
    assert a == b and json.loads(a)["element"] == "x1*d1 + 1"


@pytest.mark.parametrize("text,desc", [
    ("G(4,2,2)", GroupDescriptor.G(4, 2, 2)),
    ("S3", GroupDescriptor("S", 3)),
    ("A3", GroupDescriptor("A", 3)),
    ("cyclic(3,2)", GroupDescriptor("cyclic", 2, 3)),
    ("B2", GroupDescriptor("B-torus", 2)),
])
def test_parse_group(text, desc):
    assert parse_group(text) == desc


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "galoisweyl", "eval", "--weyl", "n=1",
                          "--expr", "d1*x1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "x1*d1 + 1"
