"""纯文本文件格式

群文件：第一行 ``degree m``，随后 m 行，每行一个生成元的像数组（0 起始，单空格分隔）。
设计文件：第一行 ``v k b``，随后 b 行，每行一个升序区组。
"""

from pathlib import Path
from typing import List, Union

from flagdesigns.core.permcore import PermGroup
from flagdesigns.models import IncidenceStructure
from flagdesigns.utils.errors import InputError

PathLike = Union[str, Path]


def _rows(text: str, header_size: int, what: str) -> List[List[int]]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError(f"Empty {what} file")
    rows = []
    for number, line in enumerate(lines, start=1):
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise InputError(f"Line {number} of the {what} file is not a list of integers") from None
    if len(rows[0]) != header_size:
        raise InputError(f"The {what} header must hold {header_size} integers")
    return rows


def parse_group(text: str) -> PermGroup:
    """解析群文件内容

    Raises:
        InputError: 格式错误或生成元不是置换
    """
    rows = _rows(text, 2, "group")
    degree, count = rows[0]
    if len(rows) - 1 != count:
        raise InputError(f"Header announces {count} generators, found {len(rows) - 1}")
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != degree:
            raise InputError(f"Line {number} holds {len(row)} images, expected {degree}")
    return PermGroup(degree, rows[1:])


def format_group(group: PermGroup) -> str:
    lines = [f"{group.degree} {len(group.generators)}"]
    lines += [" ".join(map(str, images)) for images in group.images()]
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> IncidenceStructure:
    """解析设计文件内容

    Raises:
        InputError: 格式错误（区组数、区组大小不符，或区组未排序、重复）
    """
    rows = _rows(text, 3, "design")
    v, k, b = rows[0]
    if len(rows) - 1 != b:
        raise InputError(f"Header announces {b} blocks, found {len(rows) - 1}")
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != k:
            raise InputError(f"Line {number} holds {len(row)} points, expected {k}")
    try:
        return IncidenceStructure(v=v, blocks=tuple(tuple(row) for row in rows[1:]))
    except ValueError as error:
        raise InputError(f"Malformed design: {error}") from None


def format_design(design: IncidenceStructure) -> str:
    lines = [f"{design.v} {design.k} {design.b}"]
    lines += [" ".join(map(str, block)) for block in design.blocks]
    return "\n".join(lines) + "\n"


read_group = lambda path: parse_group(Path(path).read_text())
read_design = lambda path: parse_design(Path(path).read_text())


def write_group(group: PermGroup, path: PathLike) -> None:
    Path(path).write_text(format_group(group))


def write_design(design: IncidenceStructure, path: PathLike) -> None:
    Path(path).write_text(format_design(design))
