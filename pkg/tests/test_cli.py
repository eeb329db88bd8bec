import json
import os

import pytest

from g4census import database
from g4census.cli import main


def test_run_hyp_only(tmp_path, capsys):
    assert main(["run", "--family", "hyp", "--out", str(tmp_path), "--format", "csv"]) == 0
    rows = database.load_jsonl(tmp_path / "curves.jsonl")
    assert len(rows) == 264
    assert "hyperelliptic: 264" in capsys.readouterr().out
    assert (tmp_path / "curves.csv").read_text().count("\n") == 265
    assert {"curves.jsonl", "curves.csv", "lpolys.csv", "summary.txt"} == set(os.listdir(tmp_path))


def test_run_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["run", "--family", "hyp", "--out", str(blocker / "sub")]) == 1
    assert blocker.read_text() == "x"


def test_jsonl_schema(census_dir):
    rows = database.load_jsonl(census_dir / "curves.jsonl")
    hyp = rows[0]
    assert set(hyp) == {"id", "family", "q", "p", "pretty", "N", "a", "L", "iso_class", "iso_size"}
    trig = rows[-1]
    assert set(trig) == {"id", "family", "q", "quadric", "cubic", "pretty", "N", "a", "L",
                         "iso_class", "iso_size"}
    assert len(trig["cubic"]) == 5 and len(trig["N"]) == 5 and len(trig["L"]) == 9
    assert [r["id"] for r in rows] == list(range(len(rows)))
    assert [r["family"] for r in rows] == ["hyp"] * 264 + ["trig"] * 780


def test_summary_and_lpolys(census_dir):
    summary = (census_dir / "summary.txt").read_text()
    assert "hyperelliptic: 264, trigonal: 780, total: 1044, isogeny classes: 620" in summary
    lines = (census_dir / "lpolys.csv").read_text().splitlines()
    assert len(lines) == 621
    rows = [list(map(int, ln.split(","))) for ln in lines[1:]]
    assert sum(r[9] for r in rows) == 1044
    assert all(r[9] == r[10] + r[11] for r in rows)


def test_tables(census_dir, tmp_path, capsys):
    assert main(["tables", "--in", str(census_dir), "--out", str(tmp_path)]) == 0
    text = capsys.readouterr().out
    assert "Curves for a given number of points." in text
    t1 = (tmp_path / "table_a1.csv").read_text().splitlines()
    assert t1[3] == "total,40,151,260,267,175,100,39,11,1,1044"
    t4 = (tmp_path / "table_a4.csv").read_text().splitlines()
    assert t4[2] == "trig,19,78,135,179,152,98,68,28,16,6,1,780"
    t2 = (tmp_path / "table_a2.csv").read_text().splitlines()
    assert t2[3] == "total,111,230,290,236,130,38,8,1,1044"


def test_tables_missing_input(tmp_path):
    assert main(["tables", "--in", str(tmp_path / "nothing.jsonl")]) == 1


@pytest.mark.parametrize("flags,count", [
    (["--a1", "8"], 1),
    (["--a", "0,0,0,1"], 1),
    (["--a3", "8"], 2),
    (["--a2", "7", "--N2", "15"], 1),
    (["--family", "hyp", "--N1", "8"], 0),
    (["--quadric", "q3"], 274),
])
def test_lookup(census_dir, capsys, flags, count):
    assert main(["lookup", "--db", str(census_dir), *flags]) == 0
    out = [ln for ln in capsys.readouterr().out.splitlines() if ln]
    assert len(out) == count
    for ln in out:
        json.loads(ln)


def test_verify_detects_tampering(census_dir, tmp_path, capsys):
    rows = (census_dir / "curves.jsonl").read_text().splitlines()
    bad = json.loads(rows[10])
    bad["N"][1] += 1
    rows[10] = json.dumps(bad)
    (tmp_path / "curves.jsonl").write_text("\n".join(rows) + "\n")
    assert main(["verify", "--db", str(tmp_path), "--threads", "1"]) == 2
    out = capsys.readouterr().out
    assert "FAIL database_matches_recomputation" in out
    assert "FAIL stored_records_a_recurrence" in out or "FAIL stored_records_l_from_counts" in out


def test_verify_fresh(census_dir, capsys):
    code = main(["verify", "--db", str(census_dir), "--threads", "1"])
    out = capsys.readouterr().out
    failing = [ln.split()[1].rstrip(":") for ln in out.splitlines() if ln.startswith("FAIL")]
    # the published count of a_5 = 0 curves holds for the trigonal curves only
    assert failing == ["fixture_a5_zero_four"]
    assert code == 2
    assert "PASS database_matches_recomputation" in out


def test_verify_low_kmax_warns(capsys):
    code = main(["verify", "--kmax", "3", "--threads", "1"])
    out = capsys.readouterr().out
    assert out.startswith("WARN kmax=3 is below the validated bound 6")
    # singular intersections slip through at this bound, and the checks notice
    assert code == 2 and "FAIL" in out


def test_bad_kmax_rejected():
    with pytest.raises(SystemExit):
        main(["run", "--kmax", "2"])
