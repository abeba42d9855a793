import json

import pytest

from multizagreb.cli import main
from multizagreb.indices import pi1
from multizagreb.tree import is_isomorphic, parse_tree_line, read_trees
from multizagreb.families import star


@pytest.fixture
def p5_file(tmp_path):
    f = tmp_path / "trees.txt"
    f.write_text("# P_5\n5 0 1 1 2 2 3 3 4\n")
    return f


def test_compute_row(p5_file, capsys):
    assert main(["compute", "--input", str(p5_file), "--k", "2", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert (row["pi1"], row["pi2"], row["gamma"]) == ("64", "64", 1)
    assert row["line"] == 2


def test_compute_round_trip(tmp_path, capsys):
    src = tmp_path / "a.txt"
    assert main(["enumerate", "--n", "7", "--out", str(src)]) == 0
    assert main(["compute", "--input", str(src), "--k", "1", "--format", "csv"]) == 0
    first = capsys.readouterr().out
    with open(src) as fh:
        lines = [t.to_line() for _, t in read_trees(fh)]
    again = tmp_path / "b.txt"
    again.write_text("\n".join(lines) + "\n")
    assert main(["compute", "--input", str(again), "--k", "1", "--format", "csv"]) == 0
    assert capsys.readouterr().out == first
    assert first.count("\n") == 12


def test_gamma_command(p5_file, capsys):
    assert main(["gamma", "--input", str(p5_file), "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert "gamma=2" in out


def test_family_t_nks(capsys):
    assert main(["family", "t_nks", "--n", "9", "--k", "2", "--s", "2"]) == 0
    (line,) = capsys.readouterr().out.splitlines()
    assert pi1(parse_tree_line(line)) == 1600


def test_family_corona_and_missing_flags(tmp_path, capsys):
    base = tmp_path / "base.txt"
    base.write_text("2 0 1\n")
    assert main(["family", "corona", "--k", "2", "--input", str(base)]) == 0
    (line,) = capsys.readouterr().out.splitlines()
    assert parse_tree_line(line).n == 6
    assert main(["family", "t_a_nk2", "--n", "10", "--k", "2"]) == 2
    assert "--a" in capsys.readouterr().err


def test_enumerate_filter(capsys):
    assert main(["enumerate", "--n", "10", "--filter-gamma", "2", "--k", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(parse_tree_line(x).n == 10 for x in lines)
    assert main(["enumerate", "--n", "19"]) == 2
    assert "cap" in capsys.readouterr().err


def test_transform_commands(tmp_path, capsys):
    src = tmp_path / "p4.txt"
    src.write_text("4 0 1 1 2 2 3\n")
    assert main(["transform", "contract", "--input", str(src), "--u", "1", "--v", "2"]) == 0
    (line,) = capsys.readouterr().out.splitlines()
    assert is_isomorphic(parse_tree_line(line), star(4))
    dstar = tmp_path / "ds.txt"
    dstar.write_text("7 0 1 0 2 0 3 1 4 1 5 1 6\n")
    assert main(["transform", "move", "--input", str(dstar), "--u", "0", "--v", "1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2
    assert main(["transform", "contract", "--input", str(src), "--u", "0", "--v", "1"]) == 2


def test_malformed_input_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 0 1\n\n3 0 1 1\n")
    assert main(["compute", "--input", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--bogus"])
    assert exc.value.code == 2


def test_verify_exit_codes(tmp_path):
    report = tmp_path / "r.json"
    assert main(["verify", "--claims", "thm_gamma1,lemma24", "--nmax", "8", "--kmax", "2", "--report", str(report)]) == 0
    doc = json.loads(report.read_text())
    assert [c["status"] for c in doc["claims"]] == ["discrepancy-documented", "pass"]
    assert main(["verify", "--claims", "lemma23", "--nmax", "8", "--kmax", "1"]) == 1
    assert main(["verify", "--claims", "nope"]) == 2


def test_verify_byte_identical_across_jobs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--claims", "all", "--nmax", "8", "--kmax", "2"]
    main(args + ["--jobs", "1", "--report", str(a)])
    main(args + ["--jobs", "4", "--report", str(b)])
    assert a.read_bytes() == b.read_bytes()
