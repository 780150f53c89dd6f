import json

import pytest

from kpell.cli import main
from kpell.oeis import (
    MAPPINGS,
    BFileError,
    OeisMapping,
    compare,
    normalize_id,
    parse_bfile,
)
from kpell.sequences import Family


def horadam(a, b, k, count):
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, 2 * b + k * a
    return out


def bfile(values, start=0, header=True):
    lines = ["# synthetic b-file", "# second comment"] if header else []
    lines += [f"{start + i} {v}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def test_bundled_mappings_are_the_eight_named_sequences():
    assert set(MAPPINGS) == {
        "A002605", "A015518", "A085449", "A002532",
        "A080040", "A102345", "A087131", "A127226",
    }
    kp = {m.k for m in MAPPINGS.values() if m.family is Family.KPELL}
    kq = {m.k for m in MAPPINGS.values() if m.family is Family.KPELL_LUCAS}
    assert kp == {2, 3, 4, 5}
    assert kq == {2, 3, 4, 6}


@pytest.mark.parametrize("raw, expected", [("A2605", "A002605"), ("a087131", "A087131"), ("127226", "A127226")])
def test_normalize_id(raw, expected):
    assert normalize_id(raw) == expected


def test_normalize_rejects_garbage():
    with pytest.raises(ValueError):
        normalize_id("B12")


def test_parse_bfile():
    text = "# comment\n\n0 2\n1   2\n2\t8\n  # indented comment\n3 20 extra\n"
    assert parse_bfile(text) == {0: 2, 1: 2, 2: 8, 3: 20}


@pytest.mark.parametrize("text", ["0 1\n1\n", "0 x\n", "0 1\n0 2\n"])
def test_parse_bfile_errors(text):
    with pytest.raises(BFileError):
        parse_bfile(text)


def test_compare_match():
    m = OeisMapping("A002605", Family.KPELL, 2)
    terms = parse_bfile(bfile(horadam(0, 1, 2, 40)))
    res = compare(m, terms, 30)
    assert res.matched and res.checked == 30


def test_compare_reports_first_mismatch():
    vals = horadam(2, 2, 3, 30)
    vals[7] += 1
    res = compare(OeisMapping("A102345", Family.KPELL_LUCAS, 3), parse_bfile(bfile(vals)), 30)
    assert not res.matched
    assert res.first_mismatch == 7
    assert res.found == res.expected + 1


def test_compare_flags_possible_offset_shift():
    # the same sequence listed from OEIS index 1 instead of 0
    terms = parse_bfile(bfile(horadam(0, 1, 5, 31), start=1))
    res = compare(OeisMapping("A002532", Family.KPELL, 5, offset=0), terms, 30)
    assert not res.matched
    assert "offset=1" in res.note
    shifted = compare(OeisMapping("A002532", Family.KPELL, 5, offset=1), terms, 30)
    assert shifted.matched


def test_compare_short_file_is_not_a_match():
    terms = parse_bfile(bfile(horadam(0, 1, 2, 10)))
    res = compare(OeisMapping("A002605", Family.KPELL, 2), terms, 30)
    assert not res.matched and res.first_mismatch is None
    assert "only 10" in res.note


# --- CLI surface ------------------------------------------------------------


def test_cli_match(tmp_path, capsys):
    f = tmp_path / "b087131.txt"
    f.write_text(bfile(horadam(2, 2, 4, 25)))
    assert main(["oeis", "--id", "A087131", "--file", str(f), "--n", "20", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "match" and doc["checked"] == 20 and doc["k"] == 4


def test_cli_mismatch_exit_1(tmp_path, capsys):
    f = tmp_path / "b.txt"
    f.write_text(bfile(horadam(0, 1, 3, 30)))
    assert main(["oeis", "--id", "A002605", "--file", str(f), "--n", "30"]) == 1
    assert "first_mismatch=3" in capsys.readouterr().out


def test_cli_unknown_id_exit_2(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text(bfile(horadam(0, 1, 1, 30)))
    assert main(["oeis", "--id", "A000045", "--file", str(f)]) == 2


def test_cli_custom_mapping(tmp_path):
    # Pell numbers (k = 1) under a user-supplied mapping
    f = tmp_path / "b000129.txt"
    f.write_text(bfile(horadam(0, 1, 1, 30)))
    assert main(["oeis", "--id", "A000129", "--file", str(f), "--family", "pell", "--k", "1"]) == 0
    assert main(["oeis", "--id", "A000129", "--file", str(f), "--family", "pell"]) == 2


def test_cli_missing_file_exit_3(tmp_path):
    assert main(["oeis", "--id", "A002605", "--file", str(tmp_path / "nope.txt")]) == 3


def test_cli_malformed_file_exit_3(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("0 zero\n")
    assert main(["oeis", "--id", "A002605", "--file", str(f)]) == 3


def test_cli_fetch_error_exit_3(monkeypatch):
    import kpell.cli as cli

    def boom(_):
        raise OSError("network unreachable")

    monkeypatch.setattr(cli, "fetch_bfile", boom)
    assert main(["oeis", "--id", "A002605", "--fetch"]) == 3


def test_cli_fetch_and_save(monkeypatch, tmp_path):
    import kpell.cli as cli

    monkeypatch.setattr(cli, "fetch_bfile", lambda _id: bfile(horadam(0, 1, 2, 30)))
    dest = tmp_path / "b002605.txt"
    assert main(["oeis", "--id", "A002605", "--fetch", "--save", str(dest)]) == 0
    assert parse_bfile(dest.read_text())[29] == horadam(0, 1, 2, 30)[29]
