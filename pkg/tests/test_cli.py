import io
import json
import subprocess
import sys

import pytest

from positroids import cli, verify


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_bases_oracle():
    code, out = run("bases", "21", "--source", "oracle")
    assert code == 0
    assert out.splitlines() == ["{1,2}", "{1,3}", "{2,3}", "{2,4}", "{3,4}", "count: 5"]


def test_bases_only_q():
    code, out = run("bases", "645312", "--source", "qunion", "--only-q", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 4
    assert data["bases"][0] == [1, 3, 4, 6, 9, 12]


def test_bases_identity_and_cross_check():
    code, out = run("bases", "12", "--source", "positroid", "--cross-check")
    assert code == 0 and out.endswith("count: 6\n")
    code, out = run("bases", "2143", "--source", "diagram", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 68


def test_tutte_examples():
    assert run("tutte", "21") == (0, "x^2 + x + xy + y + y^2\n")
    code, out = run("tutte", "12", "--method", "both")
    assert code == 0
    assert out.splitlines() == ["x^2 + 2x + 2y + y^2", "closed form and rank sum agree"]
    assert run("tutte", "1") == (0, "x + y\n")
    code, out = run("tutte", "1", "--format", "json")
    assert json.loads(out)["terms"] == [[0, 1, 1], [1, 0, 1]]


def test_rank_and_decompose():
    assert run("rank", "21", "1,4", "--cross-check") == (0, "1\n")
    assert run("rank", "21", "{2,3}") == (0, "2\n")
    code, out = run("decompose", "2143")
    assert code == 0 and out.splitlines()[-1] == "total: 68"


def test_counts_csv():
    code, out = run("counts", "--n", "3", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "permutation,avoids_123,g,bases,diagram_bases"
    assert lines[-1] == "321,1,14,14,14"


def test_verify_identities():
    code, out = run("verify", "--suite", "identities", "--n", "8")
    report = json.loads(out)
    assert code == 0 and report["suite"] == "identities" and report["n"] == 8
    checks = {c["name"]: c["status"] for c in report["checks"]}
    assert checks["catalan-product-sum n=8"] == "PASS"
    assert all(s == "PASS" for s in checks.values())


def test_verify_theorems():
    code, out = run("verify", "--suite", "theorems", "--n", "4", "--seed", "3")
    assert code == 0
    assert all(c["status"] == "PASS" for c in json.loads(out)["checks"])


def test_verify_conjectures():
    code, out = run("verify", "--suite", "conjectures", "--n", "4")
    report = json.loads(out)
    assert code == 0
    assert len(report["checks"]) == 4 * 24
    assert all(c["status"] == "PASS" for c in report["checks"])


@pytest.mark.parametrize("argv", [
    ["bases", "1224"],
    ["bases", "12x"],
    ["tutte", "21", "--method", "magic"],
    ["rank", "21", "9"],
    ["rank", "21", "a,b"],
    ["nonsense"],
    [],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["bases", "12345678"],
    ["verify", "--suite", "theorems", "--n", "7"],
    ["verify", "--suite", "conjectures", "--n", "6", "--which", "isomorphism"],
])
def test_bound_errors(argv):
    assert run(*argv)[0] == 3


def test_config_file(tmp_path):
    cfg = tmp_path / "bounds.json"
    cfg.write_text(json.dumps({"enumerate_max_n": 2, "suite_max_n": {"theorems": 2}}))
    assert run("--config", str(cfg), "bases", "123")[0] == 3
    assert run("verify", "--suite", "theorems", "--n", "3", "--config", str(cfg))[0] == 3
    # the override does not leak into later calls
    assert run("bases", "123")[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("--config", str(bad), "bases", "12")[0] == 2


def test_disagreement_exit(monkeypatch):
    from positroids.poly import BivariatePoly

    monkeypatch.setattr(cli, "tutte_by_rank", lambda S: BivariatePoly.const(7))
    assert run("tutte", "21", "--method", "both")[0] == 1


def test_theorem_failure_exit(monkeypatch):
    from positroids.families import SetFamily

    monkeypatch.setattr(verify, "enumerate_bases", lambda S: SetFamily(S.cols, frozenset()))
    code, out = run("verify", "--suite", "theorems", "--n", "2")
    assert code == 1
    failed = [c for c in json.loads(out)["checks"] if c["status"] == "FAIL"]
    assert failed and all("witness" in c for c in failed)


def test_conjecture_failure_does_not_change_exit(monkeypatch):
    fake = [{"n": 2, "conjecture": "tutte", "permutation": "21", "status": "FAIL",
             "witness": {"diagram": "0", "positroid": "1"}}]
    monkeypatch.setattr(verify, "check_conjectures", lambda n, which: fake)
    code, out = run("verify", "--suite", "conjectures", "--n", "2")
    assert code == 0
    assert json.loads(out)["checks"][0]["witness"] == {"diagram": "0", "positroid": "1"}


def test_console_script_is_deterministic():
    argv = [sys.executable, "-m", "positroids.cli", "verify", "--suite", "theorems", "--n", "3", "--seed", "5"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout


def test_console_script_exit_codes():
    r = subprocess.run([sys.executable, "-m", "positroids.cli", "bases", "11"], capture_output=True)
    assert r.returncode == 2 and b"error" in r.stderr
    r = subprocess.run([sys.executable, "-m", "positroids.cli", "tutte", "123456789"], capture_output=True)
    assert r.returncode == 3
