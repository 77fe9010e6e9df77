import io
import json
import subprocess
import sys

import pytest

from neville_weights.cli import main

S4 = '{"m_minus":1,"m_plus":2,"nodes":["-1","0","1","2"]}'


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_weights_json():
    code, out, _ = run("weights", "--stencil", S4, "--ks", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["sigmas"] == [["1/3", "-1/2", "1/6"], ["2/3", "1/3", "-1/3"], ["0", "1/6", "1/6"]]
    assert data["varsigma"] == ["1/6", "1/3", "1/6"]


def test_weights_all_levels_and_recurrence():
    code, out, _ = run("weights", "--stencil", S4)
    assert [d["K_s"] for d in json.loads(out)] == [1, 2]
    _, out2, _ = run("weights", "--stencil", S4, "--method", "recurrence")
    assert json.loads(out2) == json.loads(out)


def test_weights_csv_layout():
    code, out, _ = run("weights", "--stencil", S4, "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "K_s,k_s,c0,c1,c2"
    assert lines[1] == "1,0,2/3,-1/3,0"
    assert lines[-1] == "2,2,0,1/6,1/6"
    assert len(lines) == 1 + 2 + 3


def test_positivity():
    code, out, _ = run("positivity", "--stencil", S4, "--ks", "1")
    data = json.loads(out)
    assert code == 0
    assert data["interval"] == ["-1", "2"]
    assert data["labels"] == ["x_{i-1}", "x_{i+2}"]
    code, out, _ = run("positivity", "--stencil", S4, "--format", "table")
    assert "x_{i+1}" in out


def test_deriv_weights_and_eval():
    code, out, _ = run("deriv-weights", "--stencil", S4, "--ks", "1", "--n", "1")
    data = json.loads(out)
    assert data["sigmas"][1]["den"] == ["-1/2", "1"]
    code, out, _ = run("eval", "--stencil", '{"m_minus":1,"m_plus":1,"nodes":["-1","0","1"]}',
                       "--ks", "1", "--n", "1", "--at", "0", "--at", "1/4")
    pts = json.loads(out)["points"]
    assert pts[0]["weights"] == ["1/2", "1/2"]
    assert pts[1]["x"] == "1/4"


def test_float_mode():
    code, out, _ = run("eval", "--stencil", S4, "--mode", "float", "--ks", "2", "--at", "0.5")
    w = json.loads(out)["points"][0]["weights"]
    assert w == pytest.approx([0.125, 0.75, 0.125], abs=1e-14)


def test_stencil_file(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(S4)
    code, out, _ = run("weights", "--stencil-file", str(path), "--ks", "1", "--format", "table")
    assert code == 0 and "K_s" in out


@pytest.mark.parametrize("argv", [
    ["weights"],
    ["weights", "--stencil", "{bad json"],
    ["weights", "--stencil", S4, "--ks", "3"],
    ["weights", "--stencil", '{"m_minus":1,"m_plus":1,"nodes":["0","0","1"]}'],
    ["eval", "--stencil", S4, "--ks", "1"],
    ["eval", "--stencil", S4, "--ks", "1", "--n", "1", "--at", "1/2"],
    ["deriv-weights", "--stencil", S4, "--ks", "2", "--n", "5"],
    ["nonsense"],
    ["weights", "--stencil", S4, "--stencil-file", "x.json"],
])
def test_invalid_input_exit_1(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == ""
    diag = json.loads(err)
    assert set(diag) == {"error", "message"}


def test_verify_single_and_suite():
    code, out, _ = run("verify", "--stencil", S4, "--ks", "2", "--trials", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run("verify", "--max-m", "3", "--trials", "2")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(r["status"] == "pass" for r in reports)


def test_verify_failure_exit_2(monkeypatch):
    from neville_weights import cli
    from neville_weights.oracle import VerificationReport

    def broken(*args, **kwargs):
        return iter([VerificationReport({"M": 2, "K_s": 1, "n": 0}, "fail", 1, "forced")])

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run("verify", "--max-m", "2", "--format", "csv")
    assert code == 2 and "fail" in out


def test_deterministic_output():
    a = run("verify", "--max-m", "3", "--trials", "2", "--seed", "5")[1]
    b = run("verify", "--max-m", "3", "--trials", "2", "--seed", "5")[1]
    strip = lambda s: [{k: v for k, v in json.loads(line).items() if k != "detail"} for line in s.splitlines()]
    assert strip(a) == strip(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "neville_weights", "positivity", "--stencil", S4, "--ks", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["offsets"] == [-1, 2]


def test_full_suite_command():
    code, out, _ = run("verify", "--max-m", "6", "--trials", "25")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(reports) == sum(M - K + 1 for M in range(2, 7) for K in range(1, M))
    assert {r["status"] for r in reports} == {"pass"}
