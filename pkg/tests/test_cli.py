import csv
import io
import json
import subprocess
import sys

import pytest

from powres.cli import main
from powres.search import SearchReport


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["legendre", "2", "17"], "+1"),
        (["lgroup", "4q", "--q", "3"], "{1,11}"),
        (["norm", "--r", "2", "--x", "1,1"], "-1"),
        (["legendre", "3", "7", "--method", "reciprocity"], "-1"),
        (["order", "2", "1093"], "364"),
        (["order", "7", "12", "--method", "composite"], "2"),
        (["norm", "--poly", "1,0,1", "--x", "3,4"], "25"),
        (["norm", "--r", "2", "--x", "1,1", "--mod", "7"], "6"),
        (["irreducible", "4", "-4"], "reducible"),
        (["irreducible", "2", "2", "--p", "5"], "irreducible"),
        (["solve", "norm", "--r", "2", "--p", "7"], "(5, 3)"),
        (["solve", "zero", "--r", "2", "--p", "7"], "(1, 2)"),
        (["solve", "zero", "--r", "2", "--p", "5"], "none"),
        (["lgroup", "4r", "--r", "15", "--signed"], "{-17,-11,-7,-1,1,7,11,17}"),
        (["lgroup", "star", "--p", "7"], "{1,2,4}"),
    ],
)
def test_text_output(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.strip() == expected


def test_half_lists_every_subgroup(capsys):
    code, out, _ = run(["lgroup", "half", "--m", "60", "--signed"], capsys)
    lines = out.split()
    assert code == 0 and len(lines) == 3
    assert "{-17,-11,-7,-1,1,7,11,17}" in lines and "{-29,-19,-11,-1,1,11,19,29}" in lines


def test_json_lines_schema(capsys):
    code, out, _ = run(["--format", "json", "legendre", "2", "17"], capsys)
    line = json.loads(out)
    assert code == 0
    assert set(line) == {"op", "inputs", "output", "elapsed_ms"}
    assert line["op"] == "legendre" and line["output"] == 1
    assert line["inputs"] == {"r": 2, "p": 17, "method": "euler"}


def test_format_flag_after_subcommand(capsys):
    _, out, _ = run(["order", "3", "10", "--format", "json"], capsys)
    assert json.loads(out)["output"] == {"order": 4, "co_order": 1}


def test_search_json_round_trips(capsys):
    code, out, _ = run(["--format", "json", "search", "2", "3", "3", "--primes", "5", "--bound", "10"], capsys)
    reports = [SearchReport.from_dict(json.loads(line)["output"]) for line in out.splitlines()]
    assert code == 0 and [r.p for r in reports] == [2, 3, 5, 7, 11]
    assert reports[0].solution == (0, 1, 0)


def test_search_csv_columns(capsys):
    code, out, _ = run(
        ["--format", "csv", "search", "2", "3", "3", "--limit", "2100", "--bound", "20", "--jobs", "2"], capsys
    )
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["a", "b", "c", "prime", "outcome", "x", "y", "z"]
    primes = [int(r["prime"]) for r in rows]
    assert primes == sorted(primes)
    miss = next(r for r in rows if r["prime"] == "2069")
    assert miss["outcome"] == "exhausted(20)" and miss["x"] == ""


def test_search_text_summary(capsys):
    code, out, _ = run(["search", "2", "3", "3", "--limit", "2500", "--bound", "100"], capsys)
    assert code == 0 and out.splitlines()[-1] == "exhausted: 2069"


def test_domain_error_exit_1(capsys):
    code, _, err = run(["legendre", "2", "15"], capsys)
    assert code == 1 and "not an odd prime" in err
    code, _, err = run(["lgroup", "4r", "--r", "12"], capsys)
    assert code == 1 and "square-free" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["bogus"], [], ["legendre", "x", "7"], ["solve", "zero", "--r", "2"], ["--format", "xml", "order", "2", "7"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_verify_suite(capsys):
    code, out, _ = run(["verify", "uniqueness"], capsys)
    assert code == 0 and out.startswith("PASS uniqueness")
    code, out, _ = run(["verify", "list"], capsys)
    assert "orders" in out.split()


def test_survey_emits_rows(capsys):
    code, out, _ = run(["--format", "json", "solve", "survey", "--r", "3", "--limit", "40"], capsys)
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows[0]["inputs"]["p"] == 5
    thirteen = next(r for r in rows if r["inputs"]["p"] == 13)
    assert thirteen["output"]["found"] == [4, 1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "powres", "legendre", "2", "17"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "+1"
    proc = subprocess.run([sys.executable, "-m", "powres", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr


@pytest.mark.parametrize(
    "argv",
    [[], ["order"], ["legendre"], ["lgroup"], ["norm"], ["irreducible"], ["solve"], ["search"], ["verify"]],
)
def test_help_pages_render(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv + ["--help"])
    assert exc.value.code == 0
    assert "usage:" in capsys.readouterr().out
