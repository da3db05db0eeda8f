import json
import subprocess
import sys
from pathlib import Path

import pytest

from netspine.cli import main
from netspine.generators import petersen_graph
from netspine.io import read_report, write_edge_list

DATA = Path(__file__).parent / "data"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.edges"
    path.write_text("a b\nb c\n")
    return path


def test_reduce_path(p3_file, capsys):
    code, out, _ = run(["reduce", str(p3_file)], capsys)
    assert code == 0
    rep = read_report(out)
    assert rep.reduction["tau"] == {"b": 3}
    assert rep.signature is None


def test_verify_exit_codes(p3_file, capsys):
    assert run(["verify", str(DATA / "c4.edges")], capsys)[0] == 0
    code, out, err = run(["verify", str(p3_file)], capsys)
    assert code == 2 and "not irreducible" in err
    assert json.loads(out)["extra"]["verify"]["passed"] is False
    assert run(["verify", "--network", str(p3_file)], capsys)[0] == 0
    assert run(["verify", "--samples", "2", str(DATA / "c4.edges")], capsys)[0] == 0


def test_signature_petersen(tmp_path, capsys):
    path = tmp_path / "petersen.edges"
    path.write_text(write_edge_list(petersen_graph()))
    code, out, _ = run(["signature", str(path), "--max-k", "6"], capsys)
    assert code == 0
    sig = read_report(out).signature
    assert sig["counts"] == {"5": 12, "6": 10}
    assert sig["complete"] is False


def test_input_errors(tmp_path, capsys):
    assert run(["reduce", str(tmp_path / "missing")], capsys)[0] == 1
    bad = tmp_path / "bad.edges"
    bad.write_text("a b\nc\n")
    code, _, err = run(["reduce", str(bad)], capsys)
    assert code == 1 and "line 2" in err
    assert run(["reduce", str(DATA / "c4.edges"), "--max-k", "2"], capsys)[0] == 1
    assert run(["reduce", str(DATA / "c4.edges"), "--visit-order", "sideways"], capsys)[0] == 1
    assert run(["frobnicate", "x"], capsys)[0] == 1


def test_duplicate_edges_are_reported(tmp_path, capsys):
    path = tmp_path / "dup.edges"
    path.write_text("a b\nb a\n")
    code, out, err = run(["reduce", str(path)], capsys)
    assert code == 0 and "duplicate" in err
    assert json.loads(out)["input"]["duplicate_edges"] == 1


def test_report_and_dot_files(tmp_path, capsys):
    rep, dot = tmp_path / "r.json", tmp_path / "s.dot"
    code, out, _ = run(
        ["report", str(DATA / "c4.edges"), "--max-k", "8", "--report", str(rep), "--dot", str(dot),
         "--highlight", "longest:0"],
        capsys,
    )
    assert code == 0 and out == ""
    assert rep.read_text() == (DATA / "c4_report.json").read_text()
    assert dot.read_text().count("style=bold") == 4
    assert run(["report", str(DATA / "c4.edges"), "--dot", str(dot), "--highlight", "longest:3"], capsys)[0] == 1


def test_outputs_are_byte_identical(tmp_path, capsys):
    outputs = []
    for i in range(2):
        dot = tmp_path / f"{i}.dot"
        _, out, _ = run(["report", str(DATA / "c5_chord.edges"), "--visit-order", "seed:7", "--dot", str(dot)], capsys)
        outputs.append((out, dot.read_bytes()))
    assert outputs[0] == outputs[1]


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "netspine", "diameter", "-", "--no-exact-diameter"],
        input="a b\nb c\nc d\nd a\n",
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    diam = read_report(proc.stdout).diameter
    assert diam["estimate"] == 2 and diam["exact"] is None
