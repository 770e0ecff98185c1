import json
import subprocess
import sys

import pytest

from quatweyl import lattice as L
from quatweyl.cli import EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_lattice_queries(capsys):
    code, out = run(capsys, "lattice", "F4", "gram")
    assert code == EXIT_OK and out.splitlines()[2] == "0 -1 1 -1/2"
    code, out = run(capsys, "lattice", "Z2", "theta", "--max-norm", "2")
    assert [ln.split("\t")[1] for ln in out.splitlines()] == ["1", "4", "4"]
    code, out = run(capsys, "lattice", "BarnesWall", "contains", "LambdaQ8sq")
    assert "ratio: 256" in out
    code, out = run(capsys, "lattice", "E8", "det", "--json")
    assert json.loads(out)["abs"] == "1"


def test_bw_theta_with_exponent_scale(capsys):
    code, out = run(capsys, "lattice", "BarnesWall", "theta", "--max-norm", "3/4",
                    "--exponent-scale", "8", "--json")
    data = json.loads(out)
    assert [(d["q_exponent"], d["count"]) for d in data] == [("0", 1), ("4", 4320), ("6", 61440)]


def test_shell_json(capsys):
    code, out = run(capsys, "lattice", "F4", "shells", "--norm", "1", "--json")
    data = json.loads(out)
    assert data["count"] == 24 and sum(t["count"] for t in data["types"]) == 24


def test_group_queries(capsys):
    assert run(capsys, "group", "wf4", "order")[1].startswith("1152")
    assert run(capsys, "group", "gc", "order")[1].startswith("322560")
    code, out = run(capsys, "group", "c", "center", "--json")
    assert json.loads(out)["order"] == 2
    code, out = run(capsys, "group", "wf4", "coxeter")
    assert out.splitlines()[0] == "2 3 2 2"


def test_group_from_files(tmp_path, capsys):
    pf = tmp_path / "perms.txt"
    pf.write_text("# two generators of S4\n(1,2,3,4)\n(1,2)\n")
    assert run(capsys, "group", str(pf), "order")[1].strip() == "24"
    mf = tmp_path / "mats.txt"
    mf.write_text("0 1\n-1 0\n\n1 0\n0 -1\n")
    assert run(capsys, "group", str(mf), "order")[1].strip() == "8"
    rel = tmp_path / "rel.txt"
    rel.write_text("g1^4\ng2^2\n(g1 g2)^2\n")
    assert run(capsys, "group", str(mf), "relations", str(rel))[0] == EXIT_OK
    rel.write_text("g1^2\n")
    assert run(capsys, "group", str(mf), "relations", str(rel))[0] == EXIT_MISMATCH


def test_code_queries(tmp_path, capsys):
    code, out = run(capsys, "code", "weights")
    assert out.splitlines()[1] == "4\t140"
    code, out = run(capsys, "code", "words", "--weight", "4")
    assert len(out.splitlines()) == 140
    code, out = run(capsys, "code", "image", "--json")
    assert json.loads(out)["dimension"] == 11
    pf = tmp_path / "p.txt"
    pf.write_text("(0,15,8,11,14,1,6,5)(2,3,10,7,12,13,4,9)\n(0,1)\n")
    code, out = run(capsys, "code", "invariance", str(pf))
    assert [ln.split("\t")[0] for ln in out.splitlines()] == ["invariant", "not invariant"]


def test_usage_and_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3 x\n")
    assert main(["lattice", str(bad), "gram"]) == EXIT_USAGE
    assert "line 2, column 2" in capsys.readouterr().err
    dep = tmp_path / "dep.txt"
    dep.write_text("1 2\n2 4\n")
    assert main(["lattice", str(dep), "hnf"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as err:
        main(["lattice"])
    assert err.value.code == EXIT_USAGE
    assert main(["verify", "--filter", "nothing.*"]) == EXIT_USAGE


def test_cap_exceeded(capsys):
    assert main(["group", "observation", "order", "--cap", "100"]) == EXIT_CAP
    assert "100" in capsys.readouterr().err
    assert main(["lattice", "E8", "theta", "--max-norm", "4", "--cap", "50"]) == EXIT_CAP


def test_verify_filter_and_negative_control(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--filter", "wf4.*", "--json", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert [c["id"] for c in data["claims"]] == ["wf4.order-relations"]
    assert data["summary"] == {"match": 0, "mismatch": 0, "reported": 1}
    assert main(["verify", "--filter", "lambda.[ch]*"]) == EXIT_OK
    assert main(["verify", "--filter", "lambda.[ch]*", "--corrupt", "LambdaQ8sq"]) == EXIT_MISMATCH
    assert L.builtin_lattices()["LambdaQ8sq"].rows == L.LAMBDA_Q8SQ


def test_verify_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        main(["verify", "--filter", "[ct]*", "--json", str(path)])
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quatweyl", "group", "2a4", "order"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("24")
