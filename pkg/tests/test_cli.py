import subprocess
import sys

import pytest

from ewtableaux.cli import main
from ewtableaux.core import serialize

from golden import EW_14367582, EW_15873426, LE_51842736, TREE_DIFF


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_to_perm_from_file(tmp_path, capsys):
    f = tmp_path / "ew.txt"
    f.write_text(serialize(EW_15873426))
    code, out, _ = run(["to-perm", "--file", str(f)], capsys)
    assert code == 0
    assert out == "15873426\n"


def test_to_perm_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["to-perm"], capsys, serialize(LE_51842736), monkeypatch)
    assert (code, out) == (0, "51842736\n")


def test_from_perm(capsys):
    code, out, _ = run(["from-perm", "--perm", "231", "--kind", "EW"], capsys)
    assert code == 0
    assert out == "EW\n2 2\n11\n00\n"


@pytest.mark.parametrize("kind", ["EW", "NEW", "LE", "TREE"])
def test_from_perm_then_to_perm(kind, capsys, monkeypatch):
    for perm in ("1", "21", "3142", "25314"):
        _, text, _ = run(["from-perm", "--perm", perm, "--kind", kind], capsys)
        code, out, _ = run(["to-perm"], capsys, text, monkeypatch)
        assert (code, out) == (0, perm + "\n")


@pytest.mark.parametrize("via", ["direct", "composed"])
def test_convert_le_to_ew(via, capsys, monkeypatch):
    code, out, _ = run(["convert", "--from", "LE", "--to", "EW", "--via", via], capsys, serialize(LE_51842736), monkeypatch)
    assert code == 0
    assert out == serialize(EW_14367582) + "\n"


def test_convert_tree_maps(capsys, monkeypatch):
    for tree_map, perm in (("walk", "4231"), ("le", "4213")):
        _, ew, _ = run(["convert", "--from", "TREE", "--to", "EW", "--tree-map", tree_map], capsys, serialize(TREE_DIFF), monkeypatch)
        _, out, _ = run(["to-perm"], capsys, ew, monkeypatch)
        assert out == perm + "\n"


def test_convert_kind_mismatch(capsys, monkeypatch):
    code, _, err = run(["convert", "--from", "NEW", "--to", "LE"], capsys, serialize(EW_15873426), monkeypatch)
    assert code == 1
    assert "EW" in err


def test_invalid_tableau_exits_1(capsys, monkeypatch):
    code, out, err = run(["to-perm"], capsys, "EW\n2 2\n11\n11", monkeypatch)
    assert code == 1
    assert out == ""
    assert "row without 0" in err


def test_usage_errors_exit_2(capsys):
    assert run(["bogus"], capsys)[0] == 2
    assert run(["from-perm", "--perm", "12", "--kind", "XYZ"], capsys)[0] == 2
    assert run(["verify", "--suite", "nope"], capsys)[0] == 2
    assert run(["verify", "--suite", "fibonacci", "--max-size", "99"], capsys)[0] == 2
    assert run(["sandpile", "stabilize", "--shape", "2,2"], capsys)[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "--kind", "EW", "--shape", "2,2"], capsys)
    assert code == 0
    assert out.splitlines() == ["EW/2 2/11/00", "EW/2 2/11/01", "EW/2 2/11/10"]
    code, out, _ = run(["enumerate", "--kind", "LE", "--size", "5", "--count-only"], capsys)
    assert out == "120\n"


def test_stats(capsys, monkeypatch):
    code, out, _ = run(["stats", "--perm", "361542"], capsys)
    assert code == 0
    assert "desexc: 641523" in out.splitlines()
    code, out, _ = run(["stats", "--file", "-"], capsys, serialize(EW_15873426), monkeypatch)
    assert "all_one_columns: 2" in out.splitlines()
    assert "perm: 15873426" in out.splitlines()


def test_sandpile_verbs(capsys):
    code, out, _ = run(["sandpile", "stabilize", "--shape", "2", "--config", "1:1 2:1"], capsys)
    assert out == "config: 1:0 2:0\nodometer: 1:1 2:1\n"
    code, out, _ = run(["sandpile", "recurrent", "--shape", "2,2", "--config", "1:0 2:0 3:0"], capsys)
    assert out == "false\n"
    code, out, _ = run(["sandpile", "minrec", "--shape", "2,2"], capsys)
    assert len(out.splitlines()) == 3
    code, _, _ = run(["sandpile", "recurrent", "--shape", "2,2", "--config", "1:0"], capsys)
    assert code == 1


def test_verify_formats(capsys):
    code, out, _ = run(["verify", "--suite", "fibonacci", "--max-size", "3"], capsys)
    assert code == 0
    assert "3 total 5 5 PASS" in out.splitlines()
    code, out, _ = run(["verify", "--suite", "fibonacci", "--max-size", "3", "--format", "tsv"], capsys)
    assert "fibonacci\t3\ttotal\t5\t5\tPASS" in out.splitlines()


def test_render(capsys, monkeypatch):
    code, out, _ = run(["render"], capsys, "EW\n2 1\n11\n0", monkeypatch)
    assert code == 0
    assert out.splitlines() == ["1 1  0", "0 ·  2", "- -", "3 1"]


def test_module_entry_point_pipes():
    make = subprocess.run(
        [sys.executable, "-m", "ewtableaux", "from-perm", "--perm", "15873426", "--kind", "EW"],
        capture_output=True, text=True, check=True,
    )
    back = subprocess.run(
        [sys.executable, "-m", "ewtableaux", "to-perm"], input=make.stdout, capture_output=True, text=True, check=True
    )
    assert back.stdout == "15873426\n"
