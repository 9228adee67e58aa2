import json
import subprocess
import sys

import pytest

from ordinal_goodstein.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_spec_examples(capsys):
    assert run_cli(capsys, "gk", "2", "e0+w")[:2] == (0, "6")
    assert run_cli(capsys, "member", "t0(W1)", "2")[:2] == (0, "true")
    code, out, _ = run_cli(capsys, "goodstein", "3", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["terminated"] and len(d["steps"]) == 5
    assert [s["value"] for s in d["steps"]] == ["3", "3", "2", "1", "0"]


@pytest.mark.parametrize("argv, expected", [
    (["parse", "w+1"], "t0(1)+1"),
    (["--sugar", "parse", "t0(t1(0))"], "e0"),
    (["cmp", "t0(w)", "e0"], "<"),
    (["--sugar", "fundseq", "e0", "2"], "t0(w)"),
    (["--sugar", "fundseq", "W1", "e0"], "e0"),
    (["degree", "W1"], "1"),
    (["chi", "0", "W1"], "1"),
    (["imc", "t0(w+1)"], "2"),
    (["pk", "3", "w"], "2"),
    (["hardy", "w", "2", "--convention", "paper"], "4"),
    (["hk", "2", "w+1"], "7"),
    (["--sugar", "succ", "w+1", "2"], "e0"),
    (["--sugar", "ginv", "8", "2"], "t0(e0)"),
    (["basechange", "4", "2", "3"], "7625597484987"),
    (["basechange", "4", "2", "3", "--classical"], "27"),
    (["--sugar", "takeuti", "1"], "e0"),
])
def test_single_line_verbs(capsys, argv, expected):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    assert out == expected


def test_multi_line_verbs(capsys):
    assert run_cli(capsys, "--sugar", "expand", "e0", "2", "3")[1].split() == \
        ["e0", "t0(w)", "t0(2)", "w+w"]
    assert run_cli(capsys, "--sugar", "enumerate", "2", "5")[1].split() == \
        ["0", "1", "w", "w+1", "e0"]
    assert run_cli(capsys, "--sugar", "localize", "t0(e0)")[1].split() == ["1", "e0", "t0(e0)"]
    lines = run_cli(capsys, "--sugar", "invert", "t0(w)")[1].splitlines()
    assert "4b\te0\t2" in lines


def test_classical_goodstein(capsys):
    code, out, _ = run_cli(capsys, "goodstein", "3", "2", "--classical")
    assert code == 0
    assert out.splitlines()[-1] == "terminated"


def test_exit_codes(capsys):
    assert run_cli(capsys, "bogus")[0] == 64
    assert run_cli(capsys)[0] == 64
    assert run_cli(capsys, "gk", "two", "w")[0] == 64
    code, _, err = run_cli(capsys, "gk", "2", "W1")
    assert code == 1 and err
    assert run_cli(capsys, "parse", "t0(")[0] == 1
    assert run_cli(capsys, "--budget-steps", "1000", "hk", "2", "t0(w)")[0] == 2


def test_strict_rejects_unsorted_sums(capsys):
    assert run_cli(capsys, "parse", "1+w")[:2] == (0, "t0(1)")
    assert run_cli(capsys, "--strict", "parse", "1+w")[0] == 1


def test_max_index_limit(capsys, monkeypatch):
    monkeypatch.setenv("ORD_MAX_INDEX", "1")
    assert run_cli(capsys, "parse", "W2")[0] == 1
    monkeypatch.setenv("ORD_MAX_INDEX", "3")
    assert run_cli(capsys, "parse", "W2")[0] == 0


def test_check_verb(capsys):
    code, out, _ = run_cli(capsys, "check", "--suite", "order", "--nodes", "3")
    assert code == 0 and out.startswith("order: ok")
    code, out, _ = run_cli(capsys, "--format", "json", "check", "--suite", "bachmann",
                           "--nodes", "4", "--index", "1")
    assert json.loads(out)["suite"] == "bachmann"


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "ordinal_goodstein", "gk", "3", "e0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "7625597484987"
