import json

import pytest

from flagdesigns.cli import main
from flagdesigns.core.fileformat import format_design
from flagdesigns.models import CliConfig


def test_witt_verify():
    assert main(["witt", "--v", "23", "--verify"]) == 0


def test_witt_emit_and_verify_design(tmp_path, capsys):
    design, group = tmp_path / "w11.txt", tmp_path / "m11.txt"
    assert main(["witt", "--v", "11", "--emit", str(design), "--group", str(group)]) == 0
    assert design.read_text().startswith("11 5 66\n")
    assert main(["verify-design", "--file", str(design), "--t", "4", "--group", str(group)]) == 0
    out = capsys.readouterr().out
    assert "PASS 4-(11,5,1)" in out
    assert "PASS flag-transitive" in out


def test_verify_design_failure(tmp_path, witt11, capsys):
    lines = format_design(witt11).splitlines()
    block = [int(x) for x in lines[1].split()]
    outside = next(x for x in range(11) if x not in block)
    lines[1] = " ".join(map(str, sorted(block[:-1] + [outside])))
    path = tmp_path / "broken.txt"
    path.write_text("\n".join(lines) + "\n")
    assert main(["verify-design", "--file", str(path)]) == 1
    assert "witness:" in capsys.readouterr().out


def test_orbits_oracle(capsys):
    assert main(["orbits", "--q", "11", "--subgroup", "A5", "--oracle"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines[0] == "12:1"
    assert lines[-1] == "AGREE"


def test_scan_suzuki(tmp_path):
    out = tmp_path / "sz.json"
    assert main(["scan", "--family", "sz", "--max-e", "6", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 6
    assert {row["verdict"] for row in rows} == {"EliminatedMechanized"}


def test_scan_respects_small_ceiling(capsys):
    assert main(["scan", "--family", "sz", "--max-v", "20"]) == 0
    assert json.loads(capsys.readouterr().out) == []
    assert main(["scan", "--family", "sz", "--max-v", "65"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["params"] for row in rows] == [{"q": 8}]


def test_scan_to_stdout(capsys):
    assert main(["scan", "--family", "cited"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert all(row["citation"] for row in rows)


def test_classify(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["classify", "--max-q", "60", "--max-v", "2000", "--out", str(out)]) == 0
    assert "2 survivors" in capsys.readouterr().out
    assert json.loads(out.read_text())


@pytest.mark.parametrize(
    "argv",
    [
        ["witt", "--bogus"],
        ["frobnicate"],
        ["witt", "--v", "12"],
        ["scan", "--family", "psl9"],
        ["orbits", "--q", "11"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "usage:" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["witt"],
        ["orbits", "--q", "11", "--subgroup", "s4"],
        ["orbits", "--q", "12", "--subgroup", "a5"],
        ["orbits", "--q", "11", "--subgroup", "semi:2"],
        ["scan", "--family", "psl2", "--max-q", "4"],
        ["verify-design", "--file", "/nonexistent/design.txt"],
    ],
)
def test_input_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig(command="witt", emit="x.txt", verify=True)
    with pytest.raises(ValueError):
        CliConfig(command="scan", family="nope")
    assert CliConfig(command="witt", v=11).t == 4
