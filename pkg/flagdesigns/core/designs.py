"""设计参数演算与 Steiner 设计检验

包含 λ 链（可容许性）、Cameron 型上界、Steiner 性质的穷举检验、
导出设计、旗传递与点二重传递检验，以及整除性质 r | |G_x|。
"""

from collections import Counter
from itertools import combinations
from logging import debug
from math import comb
from typing import Dict, Optional, Tuple

from pydantic import BaseModel

from flagdesigns.core.permcore import (
    PermGroup,
    block_orbit_length,
    flag_orbit,
    point_stabilizer,
    transitivity_degree,
)
from flagdesigns.models import ChainEntry, DesignParams, Flag, IncidenceStructure, Verdict
from flagdesigns.utils.arith import floor_sqrt_plus, fraction_text, lambda_value
from flagdesigns.utils.errors import InputError

# 达到界 v − t + 1 ≥ (k − t + 2)(k − t + 1) 等号的已知 (t, k, v)
CAMERON_EQUALITY_CASES: Tuple[Tuple[int, int, int], ...] = (
    (3, 4, 8),
    (3, 6, 22),
    (3, 12, 112),
    (4, 7, 23),
    (5, 8, 24),
)


class CameronCheck(BaseModel):
    """Cameron 型不等式的检查结果

    属性:
        first_ok: v ≥ (t+1)(k−t+1)
        second_ok: v−t+1 ≥ (k−t+2)(k−t+1)（t ≤ 2 时不适用，记为 True）
        equality_case: (t, k, v) 是否为已知等号情形
    """

    first_ok: bool
    second_ok: bool
    equality_case: bool

    @property
    def ok(self) -> bool:
        return self.first_ok and self.second_ok


def params_from(t: int, v: int, k: int, lam: int = 1) -> DesignParams:
    """t-(v,k,λ) 参数及其 λ 链

    Args:
        t (int): 强度
        v (int): 点数
        k (int): 区组大小
        lam (int, optional): λ，默认为 1

    Returns:
        DesignParams: λ_0..λ_t 的精确值及整性；t=4 时附带 (k−2)(k−3) | (v−2)(v−3) 的结论

    Raises:
        InputError: 不满足 0 < t ≤ k ≤ v 或 λ < 1

    示例:
        >>> params_from(4, 11, 5).b
        66
        >>> params_from(4, 12, 5).admissible
        False
    """
    if not (0 < t <= k <= v) or lam < 1:
        raise InputError(f"Parameters must satisfy 0 < t <= k <= v and lambda >= 1, got ({t},{v},{k},{lam})")
    chain = []
    for i in range(t + 1):
        value = lambda_value(t, v, k, lam, i)
        chain.append(ChainEntry(i=i, value=fraction_text(value), integral=value.denominator == 1))
    pair_ok = None
    if t == 4:
        pair_ok = (v - 2) * (v - 3) % ((k - 2) * (k - 3)) == 0 if k > 3 else True
    return DesignParams(t=t, v=v, k=k, lam=lam, chain=tuple(chain), pair_divisibility_ok=pair_ok)


def k_upper_bound(v: int) -> int:
    """⌊√v + 5/2⌋（精确整数运算）"""
    if v < 1:
        raise InputError(f"Point count must be positive, got {v}")
    return floor_sqrt_plus(v, 5)


def cam_bounds_ok(t: int, v: int, k: int) -> CameronCheck:
    first = v >= (t + 1) * (k - t + 1)
    second = t <= 2 or v - t + 1 >= (k - t + 2) * (k - t + 1)
    return CameronCheck(first_ok=first, second_ok=second, equality_case=(t, k, v) in CAMERON_EQUALITY_CASES)


def _check_t(D: IncidenceStructure, t: int) -> None:
    if not 1 <= t <= D.k:
        raise InputError(f"Strength {t} must lie in 1..{D.k}")


def verify_steiner(D: IncidenceStructure, t: int) -> Verdict:
    """检验 D 是否为 Steiner t-设计

    每个区组贡献它的 C(k,t) 个 t 元子集到计数表中。
    失败时给出字典序最小的反例（被覆盖 0 次或至少 2 次的 t 元子集）。
    """
    _check_t(D, t)
    counts = Counter(sub for block in D.blocks for sub in combinations(block, t))
    witnesses = [sub for sub, n in counts.items() if n > 1]
    if len(counts) < comb(D.v, t):
        uncovered = next(sub for sub in combinations(range(D.v), t) if sub not in counts)
        witnesses.append(uncovered)
    if not witnesses:
        return Verdict(passed=True, reason=f"every {t}-subset lies in exactly one block", value=len(counts))
    witness = min(witnesses)
    return Verdict(
        passed=False,
        reason=f"{t}-subset covered {counts.get(witness, 0)} times",
        witness=list(witness),
    )


def verify_steiner_by_subsets(D: IncidenceStructure, t: int) -> Verdict:
    """按全部 C(v,t) 个子集逐一计数的检验，结论与 verify_steiner 一致"""
    _check_t(D, t)
    blocks = [frozenset(block) for block in D.blocks]
    for sub in combinations(range(D.v), t):
        covered = sum(1 for block in blocks if block.issuperset(sub))
        if covered != 1:
            return Verdict(passed=False, reason=f"{t}-subset covered {covered} times", witness=list(sub))
    return Verdict(passed=True, reason=f"every {t}-subset lies in exactly one block", value=comb(D.v, t))


def derived_design(D: IncidenceStructure, x: int) -> IncidenceStructure:
    """点 x 处的导出设计，其余点重新编号为 0..v−2"""
    if not 0 <= x < D.v:
        raise InputError(f"Point {x} outside 0..{D.v - 1}")
    relabel = lambda y: y - 1 if y > x else y
    blocks = sorted(tuple(relabel(y) for y in block if y != x) for block in D.blocks if x in block)
    return IncidenceStructure(v=D.v - 1, blocks=tuple(blocks))


def _check_degree(D: IncidenceStructure, G: PermGroup) -> None:
    if G.degree != D.v:
        raise InputError(f"Group degree {G.degree} does not match {D.v} points")


def is_flag_transitive(D: IncidenceStructure, G: PermGroup) -> Verdict:
    """G 是否在 D 的旗上传递

    Raises:
        NotAutomorphismError: 某个生成元不保持区组集合
    """
    _check_degree(D, G)
    size = flag_orbit(G, D.blocks, Flag(x=D.blocks[0][0], b=0))
    total = D.b * D.k
    debug(f"Flag orbit {size} of {total}")
    return Verdict(passed=size == total, reason=f"flag orbit {size} of {total} flags", value=size)


def is_point_2transitive(G: PermGroup) -> Verdict:
    degree = transitivity_degree(G, min(2, G.degree))
    return Verdict(passed=degree >= 2, reason=f"transitivity degree {degree}", value=degree)


def divprop_check(params: DesignParams, gx_order: int) -> Verdict:
    """整除性质 r | |G_x|"""
    r = params.r
    if r is None:
        raise InputError("Parameters are not admissible, r is not an integer")
    if gx_order % r:
        return Verdict(passed=False, reason=f"r={r} does not divide |G_x|={gx_order}", value=r)
    return Verdict(passed=True, reason=f"r={r} divides |G_x|={gx_order}", value=r)


def block_count_identity(D: IncidenceStructure, G: PermGroup) -> Dict[str, int]:
    """检验 b = v(v−1)|G_xy|/|G_B|

    |G_B| 取 |G| 除以区组轨道长度，|G_xy| 由两次点稳定子得到。

    Returns:
        Dict[str, int]: 各阶数以及 holds（1 或 0）
    """
    _check_degree(D, G)
    g_b = G.order // block_orbit_length(G, D.blocks)
    g_xy = point_stabilizer(point_stabilizer(G, 0), 1).order
    holds = D.b * g_b == D.v * (D.v - 1) * g_xy
    return {"order": G.order, "block_stabilizer": g_b, "pair_stabilizer": g_xy, "holds": int(holds)}


def first_refutation(params: DesignParams, gx_bound: Optional[int] = None) -> Optional[Dict[str, str]]:
    """参数的第一个反驳理由；可容许且通过整除性质时返回 None

    依次检查 t=4 的两两整除条件、λ 链、非平凡设计的 Cameron 不等式与 r | gx_bound。

    Args:
        params (DesignParams): 待检参数
        gx_bound (Optional[int]): |G_x| 的某个倍数（整除性质只需 r 整除它）

    Returns:
        Optional[Dict[str, str]]: {"rule": ..., 以及见证数值}
    """
    if params.pair_divisibility_ok is False:
        return {"rule": "pair-divisibility", "divisor": str((params.k - 2) * (params.k - 3))}
    if not params.admissible:
        return {"rule": "admissibility", **params.failures()}
    t, v, k = params.t, params.v, params.k
    if k < v and not cam_bounds_ok(t, v, k).ok:
        v_min = max((t + 1) * (k - t + 1), (k - t + 2) * (k - t + 1) + t - 1 if t > 2 else 0)
        return {"rule": "cameron", "v_min": str(v_min)}
    if gx_bound is not None and gx_bound % params.r:
        return {"rule": "divisibility-r", "r": str(params.r), "bound": str(gx_bound)}
    return None
