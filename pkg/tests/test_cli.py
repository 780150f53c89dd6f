import io
import json

import pytest

from kpell.cli import main, parse_range, UsageError
from kpell.report import Mode, Status, VerificationReport


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "text, expected",
    [("3", [3]), ("1..4", [1, 2, 3, 4]), ("0,2,5", [0, 2, 5]), ("1..2,5", [1, 2, 5])],
)
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["4..1", "a..b", "-1", "", "1..x"])
def test_parse_range_errors(text):
    with pytest.raises(UsageError):
        parse_range(text)


def test_gen_plain():
    code, out = run(["gen", "--family", "pell", "--k", "5", "--from", "0", "--to", "6"])
    assert code == 0
    assert out.split() == ["0", "1", "2", "9", "28", "101", "342"]


def test_gen_single():
    code, out = run(["gen", "--family", "pell-lucas", "--k", "1", "--from", "10", "--to", "10"])
    assert (code, out) == (0, "6726\n")


def test_gen_csv_and_json():
    _, out = run(["gen", "--family", "pell", "--k", "2", "--to", "3", "--format", "csv"])
    assert out == "n,value\n0,0\n1,1\n2,2\n3,6\n"
    _, out = run(["gen", "--family", "pell", "--k", "1", "--from", "200", "--to", "200", "--format", "json"])
    [row] = json.loads(out)
    assert row["n"] == 200 and isinstance(row["value"], str) and len(row["value"]) > 70


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "pell", "--k", "0", "--to", "3"],
        ["gen", "--family", "pell", "--k", "1", "--from", "5", "--to", "3"],
        ["gen", "--family", "pell", "--k", "1", "--from", "-1", "--to", "3"],
        ["table", "--k-max", "0"],
        ["binet", "--k", "0", "--n", "3"],
        ["verify", "--theorem", "p-ln", "--k", "1..x", "--n", "1"],
        ["verify", "--theorem", "nope", "--k", "1", "--n", "1"],
        ["verify", "--theorem", "p-ln", "--k", "0..2", "--n", "1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert main(argv, out=io.StringIO()) == 2


def test_argparse_errors_exit_2(run_kpell):
    assert run_kpell("gen", "--family", "nope", "--k", "1", "--to", "3").returncode == 2
    assert run_kpell("gen", "--family", "pell", "--k", "0", "--to", "3").returncode == 2


def test_table_small():
    _, out = run(["table", "--k-max", "1", "--n-max", "0"])
    assert out == "P(k,n) n=0..0\nk=1: 0\nQ(k,n) n=0..0\nk=1: 2\n"


def test_table_csv_blocks():
    _, out = run(["table", "--k-max", "2", "--n-max", "3", "--format", "csv"])
    assert out.splitlines() == [
        "family,k,0,1,2,3",
        "P,1,0,1,2,5",
        "P,2,0,1,2,6",
        "family,k,0,1,2,3",
        "Q,1,2,2,6,14",
        "Q,2,2,2,8,20",
    ]


def test_table_json():
    _, out = run(["table", "--k-max", "6", "--n-max", "10", "--format", "json"])
    doc = json.loads(out)
    assert doc["P"]["5"][9] == "14121"
    assert doc["Q"]["6"][10] == "414976"


def test_binet():
    _, out = run(["binet", "--k", "3", "--n", "5"])
    assert out == "P(3,5) = 61\nQ(3,5) = 242\n"
    _, out = run(["binet", "--k", "3", "--n", "5", "--format", "csv"])
    assert out == "k,n,p,q\n3,5,61,242\n"


def parse_reports(text):
    return [VerificationReport.from_json(line) for line in text.splitlines()]


def test_verify_p_ln_sweep():
    code, out = run(["verify", "--theorem", "p-ln", "--k", "1..3", "--l", "1..4", "--n", "1..4"])
    reports = parse_reports(out)
    assert code == 0
    assert len(reports) == 48
    assert all(r.status is Status.PASS for r in reports)
    spot = [r for r in reports if r.params == {"k": 1, "l": 2, "n": 3}]
    assert spot[0].lhs == "70"


def test_verify_all_both_modes():
    code, out = run(
        ["verify", "--theorem", "all", "--k", "1", "--l", "0..2", "--n", "0..2", "--r", "0..2", "--mode", "both"]
    )
    reports = parse_reports(out)
    assert code == 0
    assert {r.mode for r in reports} == {Mode.EXACT, Mode.NUMERIC}
    assert any(r.params.get("n") == 0 for r in reports)
    assert {r.id for r in reports} == {"p-ln", "q-ln", "p-lnr", "q-lnr", "p-even", "p-odd"}


def test_verify_q_lnr_single():
    code, out = run(["verify", "--theorem", "q-lnr", "--k", "2", "--l", "1", "--n", "1", "--r", "1"])
    [rep] = parse_reports(out)
    assert code == 0 and rep.lhs == "8" and rep.passed


def test_verify_lemmas():
    code, out = run(["verify", "--theorem", "lemmas", "--k", "1..2", "--m", "0..2", "--n", "0..2"])
    reports = parse_reports(out)
    assert code == 0
    assert len(reports) == 2 * 3 + 2 * 3 * 3


def test_verify_failure_exit_1(monkeypatch):
    import kpell.symbolic as sym

    monkeypatch.setattr(sym, "lhs_value", lambda p: -1)
    code, out = run(["verify", "--theorem", "p-ln", "--k", "1", "--l", "1", "--n", "2"])
    assert code == 1
    assert parse_reports(out)[0].status is Status.FAIL


def test_verify_skips_do_not_fail():
    code, out = run(["verify", "--theorem", "p-ln", "--k", "1", "--l", "1", "--n", "80", "--mode", "numeric"])
    [rep] = parse_reports(out)
    assert code == 0 and rep.status is Status.SKIPPED_OVERFLOW


def test_verify_parallel_is_deterministic():
    argv = ["verify", "--theorem", "all", "--k", "1..3", "--l", "0..3", "--n", "0..3", "--r", "0..2", "--mode", "both"]
    _, serial = run(argv)
    _, parallel = run(argv + ["--jobs", "3"])
    assert serial == parallel


def test_verify_output_file(tmp_path, capsys):
    dest = tmp_path / "reports.jsonl"
    code, out = run(["verify", "--theorem", "p-even", "--k", "1..2", "--n", "0..3", "--output", str(dest)])
    assert code == 0 and out == ""
    assert len(parse_reports(dest.read_text())) == 8
    assert "summary: total=8 pass=8" in capsys.readouterr().err


def test_verify_subprocess_summary(run_kpell):
    proc = run_kpell("verify", "--theorem", "p-odd", "--k", "1..2", "--n", "0..2")
    assert proc.returncode == 0
    assert "summary: total=6 pass=6 fail=0 skipped-overflow=0" in proc.stderr
    assert len(proc.stdout.splitlines()) == 6
