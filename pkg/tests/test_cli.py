import json

import pytest

from symprat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "4;2,2,2,1,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["output"] == [2, 1, 1, 0, 0, 0]
    code, out, _ = run(capsys, "reduce", "3;1,1,1,1,1")
    assert code == 0 and "(identity)" in out
    assert run(capsys, "reduce", "1;1,1")[0] == 3
    assert run(capsys, "reduce", "1;x")[0] == 2
    code, out, _ = run(capsys, "reduce", "4;2,2,2,1,1", "--format", "markdown")
    assert "| step | move |" in out


def test_report(capsys):
    code, out, _ = run(capsys, "report", "1|1/3,1/3,1/3,1/3,1/3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["face"] == "M" and data["torelli"] == "MCG(S2,5)" and data["pi1_rank"] == 0
    code, out, _ = run(capsys, "report", "1|1/2,1/8,1/8,1/8,1/8", "--format", "json")
    data = json.loads(out)
    assert (data["face"], data["torelli"], data["pi1_rank"]) == ("MOA", "Trivial", 9)
    code, _, err = run(capsys, "report", "1|1/2,1/2,1/2,1/10,1/10")
    assert code == 3 and "nu >= c1+c2+c3" in err
    assert run(capsys, "report", "1|1/3,1/4x")[0] == 2
    assert run(capsys, "report", "1|1/3,1/3,1/3,1/3,1/3,1/3")[0] == 2


def test_report_auto_reduce(capsys):
    code, out, _ = run(capsys, "report", "1|1/8,1/2,1/4", "--auto-reduce", "--format", "json")
    assert code == 0 and json.loads(out)["omega"] == ["1", "1/2", "1/4", "1/8"]


def test_report_formats_are_deterministic(capsys):
    for fmt in ("json", "markdown", "plain"):
        first = run(capsys, "report", "1|1/3,1/3,1/3,1/3,1/3", "--format", fmt)
        assert first == run(capsys, "report", "1|1/3,1/3,1/3,1/3,1/3", "--format", fmt)


def test_face(capsys):
    code, out, _ = run(capsys, "face", "MA", "--seed", "1", "--format", "json")
    assert code == 0 and json.loads(out)["torelli"] == "MCG(S2,4)"
    assert run(capsys, "face", "MZ")[0] == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "5", "--format", "markdown")
    assert code == 0 and len(out.strip().splitlines()) == 34
    assert run(capsys, "table", "9")[0] == 2
    code, out, _ = run(capsys, "table", "2", "--format", "json")
    assert json.loads(out)["rows"][1]["face"] == "BOA"


def test_table_mismatch(capsys, monkeypatch):
    from symprat import tables

    monkeypatch.setattr(tables, "golden_text", lambda k: "nothing\n")
    code, _, err = run(capsys, "table", "3")
    assert code == 1 and "line 1" in err


def test_braid(capsys):
    code, out, _ = run(capsys, "braid", "5", "--quotient", "--format", "json", "--generating", "A12,A13,A14,A23,A24")
    data = json.loads(out)
    assert code == 0 and data["ab_free_rank"] == 5 and data["spans_abelianization"] is True
    assert data["generators"]["A24"] == "s3 s2 s2 s3^-1"
    assert run(capsys, "braid", "9")[0] == 2
    assert run(capsys, "braid", "4", "--generating", "A19")[0] == 2


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["report"]) == 2
    assert main(["table", "x"]) == 2
