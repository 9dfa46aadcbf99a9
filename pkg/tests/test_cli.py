from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from spanfactor.cli import main, parse_closure_index


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_closure_index_parsing():
    assert parse_closure_index("1f", 8) == 7
    assert parse_closure_index("kf:3", 8) == 10
    assert parse_closure_index("ktree:3,2", 10) == 7
    assert parse_closure_index("5", 8) == 5
    with pytest.raises(ValueError):
        parse_closure_index("ktree:3", 10)


def test_closure_command(cli):
    code, out, _ = cli(["closure", "--l", "3"], "Ch\n")  # P4 -> K4
    assert code == 0 and out.split() == ["C~"]


def test_check_command_jsonl(cli):
    code, out, _ = cli(["check", "--property", "1-factor"], "C~\nBw\n")
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["answer"] for r in recs] == ["yes", "no"]
    assert len(recs[0]["certificate"]) == 2
    code, out, _ = cli(["check", "--property", "leaf-degree", "--k", "1"], "J~~~~~~_C??\n")
    assert json.loads(out) == {"graph6": "J~~~~~~_C??", "answer": "no", "violator": [0]}
    code, out, _ = cli(["check", "--property", "k-tree", "--k", "2", "--budget", "1"], "J~~~~~~_C??\n")
    assert json.loads(out)["answer"] in ("no", "budget")
    code, out, _ = cli(["check", "--property", "k-tree", "--k", "2"], "C?\n")
    assert json.loads(out)["reason"] == "disconnected"


def test_spectral_and_cliques(cli):
    code, out, _ = cli(["spectral"], "C~\n")
    assert json.loads(out)["rho"] == 3.0
    code, out, _ = cli(["spectral", "--method", "quotient", "--a", "1", "--b", "3", "--c", "2"])
    assert code == 0 and abs(json.loads(out)["rho"] - 3.1774096809) < 1e-9
    code, out, _ = cli(["cliques", "--r", "3"], "C~\n")
    assert json.loads(out)["count"] == 4


def test_gen_and_threshold(cli):
    code, out, _ = cli(["gen", "--family", "exktree", "--n", "14", "--m", "1", "--k", "3"])
    assert code == 0 and out.strip() == "M~~~~~~~~~o?_?_??"
    code, out, _ = cli(["threshold", "--which", "phi", "--n", "10", "--r", "2", "--q", "2"])
    assert out.strip() == "27"
    code, out, _ = cli(["threshold", "--which", "spec1f", "--n", "16", "--delta", "1"])
    assert out.strip() == "12.1346610995"


def test_verify_exit_codes(cli):
    code, out, _ = cli(["verify", "--theorem", "BND-L33", "--n", "5"])
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out, _ = cli(["verify", "--theorem", "EQ-T111", "--n", "3", "--k", "1", "--format", "csv"])
    assert code == 1 and "Bw" in out
    code, _, err = cli(["verify", "--theorem", "T13i", "--n", "9", "--r", "2", "--delta", "1"])
    assert code == 2 and "n even" in err
    code, out, _ = cli(["verify", "--theorem", "BND-L27", "--n", "4", "--source", "file:"], "C~\nCr\n")
    assert code == 0 and json.loads(out)["scanned"] == 2
    code, out, _ = cli(["verify", "--theorem", "T13i", "--n", "8", "--r", "2", "--delta", "1",
                        "--source", "random:500:0.5", "--seed", "3"])
    assert code == 0 and json.loads(out)["source"].startswith("random:500")


def test_perturb_command(cli):
    code, out, _ = cli(["perturb", "--family", "exleaf", "--n", "11", "--delta", "1", "--k", "1"])
    assert code == 0 and json.loads(out)["exceptional_hits"] == 1


def test_usage_errors_exit_two(cli):
    assert cli(["check", "--property", "k-tree"], "C~\n")[0] == 2
    assert cli(["closure", "--l", "1f"], "not-graph6\n")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spanfactor", "gen", "--family", "gen3", "--a", "1",
                           "--b", "2", "--c", "0"], capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "Bw"
