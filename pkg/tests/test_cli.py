import json
import subprocess
import sys

import pytest

from pellsum import __version__
from pellsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_text(capsys):
    code, out, _ = run(capsys, "gen", "--seq", "pell", "--from", "0", "--count", "7")
    assert code == 0 and out == "0 1 2 5 12 29 70\n"


def test_gen_custom_csv(capsys):
    code, out, _ = run(capsys, "gen", "--coeffs", "1,1", "--init", "2,1", "--count", "3", "--format", "csv")
    assert code == 0 and out == "n,value\n0,2\n1,1\n2,3\n"


def test_gen_negative_coefficients(capsys):
    code, out, _ = run(capsys, "gen", "--coeffs", "3,-1", "--init", "0,1", "--count", "5")
    assert out == "0 1 3 8 21\n"


def test_search_pell_six_not_found(capsys):
    code, out, _ = run(capsys, "search", "--seq", "pell", "--window", "6", "--horizon", "100")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"tool-version", "subcommand", "params", "result"}
    assert doc["tool-version"] == __version__ and doc["subcommand"] == "search"
    assert doc["result"]["found"] is False


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--id", "pell-sum-4N", "--nmax", "100", "--Nmax", "10")
    assert code == 0
    assert json.loads(out)["result"][0]["passed"] is True


def test_verify_failure_exit_one(capsys, monkeypatch):
    from pellsum import identities

    def broken(**_):
        rep = identities.VerificationReport("broken", {"n": [0, 0]})
        rep.passed = False
        rep.counterexample = {"check": "x", "params": {"n": 0}, "lhs": 1, "rhs": 2}
        return rep

    monkeypatch.setitem(identities.VERIFIERS, "broken", broken)
    code, out, err = run(capsys, "verify", "--id", "broken", "--format", "text")
    assert code == 1
    assert "counterexample" in out and "failed" in err


def test_output_is_deterministic(capsys):
    args = ("classify", "--seq", "fibonacci", "--Nmax", "8", "--horizon", "80", "--format", "json")
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--seq", "pell", "--Nmax", "4", "--horizon", "60", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "label,N,found,C,k,horizon"
    assert lines[4] == "pell,4,True,4,2,60"


def test_pisano_json_lines(capsys):
    code, out, _ = run(capsys, "pisano", "--seq", "pell", "--mmin", "1", "--mmax", "3")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[2] == {"m": 3, "preperiod": 0, "period": 8, "parity": "even"}
    assert rows[0]["period"] == 1


def test_pisano_state_space_guard(capsys):
    code, _, err = run(capsys, "pisano", "--seq", "pell", "--m", "5000")
    assert code == 2 and "exceeds" in err


def test_tilings_listing(capsys):
    code, out, _ = run(capsys, "tilings", "enumerate", "--k", "1", "--n", "2", "--list")
    assert code == 0 and out.splitlines() == ["B B", "B W", "W B", "W W", "G2"]


def test_tilings_blocksum(capsys):
    code, out, _ = run(capsys, "tilings", "blocksum", "--k", "2", "--a", "3", "--b", "2", "--nmax", "60")
    assert code == 0 and out.startswith("PASS")


def test_conjecture_grid(capsys):
    code, out, _ = run(capsys, "conjecture", "--k", "2", "--i", "1", "--Nmax", "10")
    assert code == 0
    row = out.splitlines()[1]
    assert row.split()[1:] == [".", ".", ".", ".", "#", ".", ".", ".", "."]


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "--seq", "pell", "--n", "0", "--window", "4", "--count", "2")
    assert out == "0 8\n1 20\n"


def test_large_output_needs_force(capsys):
    code, _, err = run(capsys, "gen", "--seq", "fibonacci", "--from", "40000000", "--count", "1")
    assert code == 2 and "--force" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "gen", "--seq", "lucas", "--count", "3", "--format", "json", "-o", str(target))
    assert out == "" and json.loads(target.read_text())["result"] == [2, 1, 3]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["gen", "--seq", "pell", "--unknown-flag"],
        ["gen", "--seq", "nope"],
        ["gen"],
        ["gen", "--coeffs", "1,1"],
        ["gen", "--coeffs", "1,0", "--init", "0,1"],
        ["verify", "--id", "missing"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "pellsum.cli", "gen", "--seq", "fibonacci", "--count", "6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "0 1 1 2 3 5\n"
