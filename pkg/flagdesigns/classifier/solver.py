"""区组稳定子方程

PSL(2,q) 情形中，|PSL(2,q)_{0B}| 与 k 决定 q：
    G = PSL(2,q)：          (q−2)·P·n       = (k−1)(k−2)(k−3)
    PSL(2,q) < G，p 奇：    (q−2)·P·n / 2   = (k−1)(k−2)(k−3)
    p = 2，域自同构阶 s：   (q−2)·P         = (k−1)(k−2)(k−3)·s
其中 P = |PSL(2,q)_{0B}|，n = gcd(2, q−1)。
"""

from math import gcd
from typing import Dict, Optional, Tuple

from flagdesigns.core.psl2orbits import psl2_context, validate_spec
from flagdesigns.models import EquationVariant, SolveResult, SubgroupSpec
from flagdesigns.utils.arith import prime_power, triple
from flagdesigns.utils.errors import SubgroupAbsentError


def _sides(k: int, pointwise_order: int, n: int, variant: EquationVariant, s: Optional[int]) -> Tuple[int, int]:
    """返回 (numerator, denominator)，使 q − 2 = numerator / denominator"""
    if variant == "simple":
        return triple(k), pointwise_order * n
    if variant == "extended":
        return 2 * triple(k), pointwise_order * n
    return triple(k) * s, pointwise_order


def solve_q(
    k: int,
    pointwise_order: int,
    n: int,
    variant: EquationVariant = "simple",
    s: Optional[int] = None,
) -> SolveResult:
    """解出唯一的 q

    Args:
        k (int): 区组大小，至少为 5
        pointwise_order (int): |PSL(2,q)_{0B}|
        n (int): 1 或 2
        variant (EquationVariant): 方程变体
        s (Optional[int]): p = 2 变体中域自同构部分的素数阶

    Returns:
        SolveResult: 解出的 q，或无解原因

    示例:
        >>> solve_q(6, 2, 2).q
        17
    """
    if k < 5 or pointwise_order < 1 or n not in (1, 2):
        raise ValueError(f"Invalid equation parameters k={k}, P={pointwise_order}, n={n}")
    if (variant == "char2") != (s is not None):
        raise ValueError("The field automorphism order s is required exactly for the char2 variant")
    numerator, denominator = _sides(k, pointwise_order, n, variant, s)
    if numerator % denominator:
        return SolveResult(reason="non-integer")
    q = numerator // denominator + 2
    pp = prime_power(q)
    if pp is None or q < 5:
        return SolveResult(reason="not a prime power")
    if gcd(2, q - 1) != n or (variant == "char2" and pp[0] != 2):
        return SolveResult(reason="n mismatch")
    return SolveResult(q=q)


def equation_holds(
    k: int, q: int, pointwise_order: int, n: int, variant: EquationVariant = "simple", s: Optional[int] = None
) -> bool:
    numerator, denominator = _sides(k, pointwise_order, n, variant, s)
    return (q - 2) * denominator == numerator


def equation_consequences(k: int, q: int, pointwise_order: int, n: int) -> Dict[str, bool]:
    """方程成立时必然成立的两个推论

    Returns:
        Dict[str, bool]: divides（k | (q−2)Pn + 6）与 cubic（(q−2)Pn + 6 = k(k²−6k+11)）
    """
    lhs = (q - 2) * pointwise_order * n + 6
    return {"divides": lhs % k == 0, "cubic": lhs == k * (k * k - 6 * k + 11)}


def solve_for_subgroup(kind: str, k: int, pointwise_order: int, n: int) -> SolveResult:
    """先解 q，再检查子群类在该 q 下是否存在"""
    result = solve_q(k, pointwise_order, n)
    if result.q is None:
        return result
    try:
        validate_spec(psl2_context(result.q), SubgroupSpec(kind=kind))
    except SubgroupAbsentError as error:
        return SolveResult(q=result.q, rejected_by=str(error))
    return result
