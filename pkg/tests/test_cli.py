"""Command-line interface: output formats, exit codes, guard overrides."""

import io
import json
import subprocess
import sys

import pytest

from wordpat.cli import main
from wordpat.construction import build
from wordpat.words import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_std(capsys):
    code, out, _ = run(capsys, "std", "296893")
    assert code == 0
    assert out == "042341\n"


def test_repeats(capsys):
    code, out, _ = run(capsys, "repeats", "00110")
    assert code == 0
    assert out == "3\n"


def test_contains_hit_and_miss(capsys):
    code, out, _ = run(capsys, "contains", "13043134", "1101")
    assert (code, out) == (0, "yes\n")
    code, out, _ = run(capsys, "contains", "13043134", "1101", "--occurrence")
    assert (code, out) == (0, "yes [2,5,6,7]\n")
    code, out, _ = run(capsys, "contains", "012", "00")
    assert (code, out) == (1, "no\n")


def test_contains_standardises_the_pattern(capsys):
    # 2212 standardises to 1101 before matching.
    code, out, _ = run(capsys, "contains", "13043134", "2212", "--occurrence")
    assert (code, out) == (0, "yes [2,5,6,7]\n")


def test_algebra_ops(capsys):
    assert run(capsys, "algebra", "concat", "1", "11")[1] == "111\n"
    assert run(capsys, "algebra", "dsum", "31422", "4132")[1] == "314228576\n"
    assert run(capsys, "algebra", "ssum", "2413", "121")[1] == "4635121\n"
    assert run(capsys, "algebra", "dpow", "21", "3")[1] == "214365\n"
    assert run(capsys, "algebra", "spow", "12", "3")[1] == "563412\n"


def test_algebra_errors(capsys):
    code, _, err = run(capsys, "algebra", "dpow", "21", "x")
    assert code == 2
    assert "error:" in err
    # Structurally valid words can still violate the operand domain.
    code, _, err = run(capsys, "algebra", "dsum", "01", "1")
    assert code == 1
    assert "error:" in err


def test_construct_parts(capsys):
    assert run(capsys, "construct", "--n", "2", "--part", "r")[1] == "3 4 1 2\n"
    assert run(capsys, "construct", "--n", "1", "--part", "q")[1] == "1 1\n"
    # --k defaults to 1 and --part defaults to s.
    code, out, _ = run(capsys, "construct", "--n", "1")
    assert (code, out) == (0, "1 1\n")


def test_construct_output_round_trips(capsys):
    parts = build(2, 1)
    for name, want in [("p", parts.p), ("rprime", parts.r_prime), ("s", parts.s)]:
        _, out, _ = run(capsys, "construct", "--n", "2", "--part", name)
        assert parse_word(out.strip()) == want


def test_verify_human_output(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0
    assert out.startswith("length=128 repeats=64 multiplicity_ok=True avoided=all")
    assert "elapsed_ms=" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"length", "repeats", "multiplicity_ok", "avoided", "elapsed_ms"}
    assert doc["length"] == 2
    assert doc["repeats"] == 1
    assert doc["multiplicity_ok"] is True
    assert all(doc["avoided"].values())


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--k", "2")
    assert code == 1
    assert "avoided=DoubleRun(id,rev),DoubleRun(rev,id)" in out


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "000", "--n", "1")
    assert (code, out) == (0, "Constant [1,2,3]\n")
    code, out, _ = run(capsys, "witness", "0101", "--n", "1", "--k", "1")
    assert (code, out) == (0, "DoubleRun(id,id) [1,2,3,4]\n")


def test_witness_trace(capsys):
    code, out, _ = run(capsys, "witness", "0101", "--n", "1", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "DoubleRun(id,id) [1,2,3,4]"
    doc = json.loads(lines[1])
    assert doc["occurrence"] == [1, 2, 3, 4]
    assert doc["family"] == "DoubleRun(id,id)"
    assert doc["branch"] == "double_run"


def test_witness_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0110\n"))
    code, out, _ = run(capsys, "witness", "-", "--n", "1")
    assert (code, out) == (0, "DoubleRun(id,rev) [1,2,3,4]\n")


def test_witness_insufficient_repeats(capsys):
    code, _, err = run(capsys, "witness", "012", "--n", "1")
    assert code == 1
    assert "error:" in err


def test_oracle_cayley(capsys):
    code, out, _ = run(capsys, "oracle", "cayley", "--len", "2")
    assert (code, out) == (0, "00\n01\n10\n")


def test_oracle_balanced(capsys):
    code, out, _ = run(capsys, "oracle", "balanced", "--values", "2", "--mult", "1")
    assert (code, out) == (0, "12\n21\n")


def test_oracle_max_repeats(capsys):
    code, out, _ = run(capsys, "oracle", "max-repeats", "--n", "1", "--k", "1", "--max-values", "3")
    assert (code, out) == (0, "max_repeats=1 witness=00\n")


def test_oracle_balanced_check(capsys):
    code, out, _ = run(capsys, "oracle", "balanced-check", "--n", "1", "--k", "1")
    assert (code, out) == (0, "unavoidable=True\n")


def test_guard_flag_and_env(capsys, monkeypatch):
    code, _, err = run(capsys, "oracle", "cayley", "--len", "4", "--guard", "3")
    assert code == 1
    assert "guard" in err
    monkeypatch.setenv("REPEATS_GUARD", "3")
    code, _, _ = run(capsys, "oracle", "cayley", "--len", "4")
    assert code == 1
    # The explicit flag wins over the environment.
    code, out, _ = run(capsys, "oracle", "cayley", "--len", "4", "--guard", "100")
    assert code == 0
    assert len(out.splitlines()) == 75
    monkeypatch.setenv("REPEATS_GUARD", "notanumber")
    code, _, err = run(capsys, "oracle", "cayley", "--len", "4")
    assert code == 2
    assert "REPEATS_GUARD" in err


def test_verify_guard_exceeded(capsys):
    code, _, err = run(capsys, "verify", "--n", "2", "--guard", "10")
    assert code == 1
    assert "guard" in err


def test_usage_errors(capsys):
    assert run(capsys, "std", "xy")[0] == 2
    assert run(capsys, "contains", "0101", "ab")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_render(capsys):
    code, out, _ = run(capsys, "render", "010")
    assert code == 0
    assert out.count("*") == 3
    code, _, err = run(capsys, "render", "")
    assert code == 1
    assert "error:" in err


def test_installed_entry_point():
    proc = subprocess.run(
        ["wordpat", "std", "3412"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    assert proc.stdout == "2301\n"
