"""Witt 设计与 Mathieu 群

4-(11,5,1) 与 4-(23,7,1) 设计取自二次剩余码（三元与二元 Golay 码）
最小重码字的支撑集；M11 与 M23 的生成元作为内置数据读入，只信任校验结果。
"""

from functools import lru_cache, reduce
from importlib.resources import files
from itertools import product
from logging import info
from operator import mul
from typing import Dict, List, Sequence

import galois
import numpy as np
from sympy.ntheory import n_order

from flagdesigns.core.designs import (
    block_count_identity,
    derived_design,
    is_flag_transitive,
    is_point_2transitive,
    verify_steiner,
)
from flagdesigns.core.fileformat import parse_group
from flagdesigns.core.gf import field_build, galois_field
from flagdesigns.core.permcore import (
    PermGroup,
    block_action,
    conjugate,
    make_permutation,
    set_image,
    transitivity_degree,
)
from flagdesigns.models import IncidenceStructure, MathieuData, QRCodeSpec
from flagdesigns.utils.errors import (
    DataIntegrityError,
    InputError,
    InternalConsistencyError,
    NotAutomorphismError,
    VerificationError,
)

# 码长到域特征、区组大小、区组数、群阶与数据文件的对应
QR_CHARACTERISTIC: Dict[int, int] = {11: 3, 23: 2}
BLOCK_SIZE: Dict[int, int] = {11: 5, 23: 7}
BLOCK_COUNT: Dict[int, int] = {11: 66, 23: 253}
MATHIEU_ORDER: Dict[int, int] = {11: 7920, 23: 10200960}
MATHIEU_FILES: Dict[int, str] = {11: "m11.txt", 23: "m23.txt"}


def _check_v(v: int) -> None:
    if v not in QR_CHARACTERISTIC:
        raise InputError(f"Witt designs are built for v=11 or v=23, got {v}")


def qr_code_spec(v: int) -> QRCodeSpec:
    _check_v(v)
    residues = sorted({x * x % v for x in range(1, v)})
    return QRCodeSpec(length=v, characteristic=QR_CHARACTERISTIC[v], residues=tuple(residues))


def generator_polynomial(spec: QRCodeSpec) -> List[int]:
    """g(x) = Π_{r 为二次剩余} (x − β^r)，β 为 v 次本原单位根

    Returns:
        List[int]: 升幂排列的系数，全部落在素域中

    Raises:
        InternalConsistencyError: 系数不在素域中
    """
    p, v = spec.characteristic, spec.length
    fs = field_build(p, n_order(p, v))
    GF = galois_field(fs)
    beta = GF.primitive_element ** ((fs.q - 1) // v)
    poly = reduce(mul, (galois.Poly(GF([1, int(-(beta**r))])) for r in spec.residues))
    coeffs = [int(c) for c in poly.coeffs]
    if any(c >= p for c in coeffs):
        raise InternalConsistencyError(f"Generator polynomial {poly} is not defined over GF({p})")
    return coeffs[::-1]


def codewords(spec: QRCodeSpec) -> np.ndarray:
    """循环码的全部码字（每行一个）"""
    g = generator_polynomial(spec)
    p, v = spec.characteristic, spec.length
    dim = v - (len(g) - 1)
    generator = np.zeros((dim, v), dtype=np.int64)
    for row in range(dim):
        generator[row, row : row + len(g)] = g
    messages = np.array(list(product(range(p), repeat=dim)), dtype=np.int64)
    return messages @ generator % p


@lru_cache(maxsize=None)
def witt_design(v: int) -> IncidenceStructure:
    """Witt 4-(11,5,1) 或 4-(23,7,1) 设计

    三元码中 ±c 有相同支撑集，这里按支撑集去重。

    Raises:
        InternalConsistencyError: 区组数不是 66 / 253
    """
    spec = qr_code_spec(v)
    words = codewords(spec)
    weights = np.count_nonzero(words, axis=1)
    supports = {tuple(int(x) for x in np.flatnonzero(word)) for word in words[weights == BLOCK_SIZE[v]]}
    if len(supports) != BLOCK_COUNT[v]:
        raise InternalConsistencyError(f"Found {len(supports)} blocks for v={v}, expected {BLOCK_COUNT[v]}")
    info(f"Built Witt design on {v} points with {len(supports)} blocks")
    return IncidenceStructure(v=v, blocks=tuple(sorted(supports)))


def block_orbit_design(group: PermGroup, base_block: Sequence[int]) -> IncidenceStructure:
    """区组 base_block 在群作用下的轨道构成的关联结构"""
    seen = {tuple(sorted(base_block))}
    frontier = list(seen)
    while frontier:
        block = frontier.pop()
        for g in group.generators:
            image = set_image(g, block)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return IncidenceStructure(v=group.degree, blocks=tuple(sorted(seen)))


def mathieu_data(v: int) -> MathieuData:
    """读取内置的生成元数据"""
    _check_v(v)
    text = files("flagdesigns.data").joinpath(MATHIEU_FILES[v]).read_text()
    try:
        group = parse_group(text)
    except InputError as error:
        raise DataIntegrityError(f"Vendored generators for M{v} are malformed: {error}") from None
    return MathieuData(degree=v, generators=group.images(), expected_order=MATHIEU_ORDER[v])


def _preserves(group: PermGroup, design: IncidenceStructure) -> bool:
    try:
        block_action(group, design.blocks)
    except NotAutomorphismError:
        return False
    return True


@lru_cache(maxsize=None)
def mathieu_group(v: int) -> PermGroup:
    """校验过的 M11 / M23

    v 次轮换固定的循环 Steiner 系统恰有两个，它们被 x ↦ −x 互换；
    内置生成元若保持另一个，就用该映射共轭到 witt_design(v) 上。

    Raises:
        DataIntegrityError: 阶、传递度或区组保持性不符
    """
    data = mathieu_data(v)
    group = PermGroup(v, data.generators)
    if group.order != data.expected_order:
        raise DataIntegrityError(f"M{v} generators give order {group.order}, expected {data.expected_order}")
    degree = transitivity_degree(group, 5)
    if degree != data.expected_transitivity:
        raise DataIntegrityError(f"M{v} generators are {degree}-transitive, expected {data.expected_transitivity}")
    design = witt_design(v)
    if not _preserves(group, design):
        negation = make_permutation([(-x) % v for x in range(v)])
        group = PermGroup(v, [conjugate(g, negation) for g in group.generators])
        if not _preserves(group, design):
            raise DataIntegrityError(f"M{v} generators preserve neither cyclic Steiner system on {v} points")
    return group


def verify_witt_pair(v: int) -> int:
    """验证 (witt_design(v), mathieu_group(v))，返回旗轨道长度

    Raises:
        VerificationError: 某个子检查失败
    """
    design = witt_design(v)
    group = mathieu_group(v)
    checks = {
        "steiner": verify_steiner(design, 4),
        "flag-transitive": is_flag_transitive(design, group),
        "point-2-transitive": is_point_2transitive(group),
        "derived": verify_steiner(derived_design(design, 0), 3),
    }
    for name, verdict in checks.items():
        if not verdict.passed:
            raise VerificationError(f"{name} (v={v})", verdict.reason)
    if not block_count_identity(design, group)["holds"]:
        raise VerificationError(f"block-count (v={v})", "b != v(v-1)|G_xy|/|G_B|")
    if block_orbit_design(group, design.blocks[0]) != design:
        raise VerificationError(f"block-orbit (v={v})", "blocks do not form a single group orbit")
    size = checks["flag-transitive"].value
    info(f"Verified v={v}: flag orbit {size}")
    return size


def verify_main_theorem() -> Dict[int, int]:
    """验证两个 (设计, 群) 对

    Returns:
        Dict[int, int]: v ↦ 旗轨道长度（330 与 1771）
    """
    return {v: verify_witt_pair(v) for v in (11, 23)}
