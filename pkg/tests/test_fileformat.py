import pytest

from flagdesigns.core.fileformat import (
    format_design,
    format_group,
    parse_design,
    parse_group,
    read_design,
    read_group,
    write_design,
    write_group,
)
from flagdesigns.core.permcore import PermGroup
from flagdesigns.utils.errors import InputError

FANO = "7 3 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"


def test_design_text():
    design = parse_design(FANO)
    assert (design.v, design.k, design.b) == (7, 3, 7)
    assert format_design(design) == FANO


def test_group_text():
    group = parse_group("4 2\n1 2 3 0\n1 0 2 3\n")
    assert group.order == 24
    assert format_group(group) == "4 2\n1 2 3 0\n1 0 2 3\n"


def test_files(tmp_path, witt11, m11):
    write_design(witt11, tmp_path / "d.txt")
    write_group(m11, tmp_path / "g.txt")
    assert read_design(tmp_path / "d.txt") == witt11
    assert read_group(tmp_path / "g.txt").order == 7920


@pytest.mark.parametrize(
    "text",
    [
        "",
        "7 3\n0 1 2\n",
        "7 3 2\n0 1 2\n",
        "7 3 1\n0 1\n",
        "7 3 1\n2 1 0\n",
        "7 3 2\n0 1 2\n0 1 2\n",
        "7 3 1\n0 1 7\n",
        "7 3 1\n0 a 2\n",
    ],
)
def test_bad_designs(text):
    with pytest.raises(InputError):
        parse_design(text)


@pytest.mark.parametrize("text", ["4 1\n1 2 3\n", "4 2\n1 2 3 0\n", "3 1\n0 0 1\n", "3\n0 1 2\n"])
def test_bad_groups(text):
    with pytest.raises(InputError):
        parse_group(text)


def test_empty_group_is_trivial():
    assert PermGroup(3, []).order == 1
