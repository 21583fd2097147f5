"""整数算术工具

素数幂判定、素数幂枚举、精确有理数格式化等小工具。
数论部分全部交给 sympy.ntheory。
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import List, Optional, Tuple

from sympy import factorint, primerange


@lru_cache(maxsize=4096)
def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """把 q 分解为 p^e

    Args:
        q (int): 待分解的正整数

    Returns:
        Optional[Tuple[int, int]]: q 是素数幂时返回 (p, e)，否则返回 None

    示例:
        >>> prime_power(81)
        (3, 4)
        >>> prime_power(12) is None
        True
    """
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, e),) = factors.items()
    return int(p), int(e)


is_prime_power = lambda q: prime_power(q) is not None


def prime_powers(lo: int, hi: int) -> List[int]:
    """按升序列出 [lo, hi] 内全部素数幂"""
    found = []
    for p in primerange(2, hi + 1):
        power = int(p)
        while power <= hi:
            if power >= lo:
                found.append(power)
            power *= int(p)
    found.sort()
    return found


# 三连积 (k-1)(k-2)(k-3)，几乎所有 t=4 的方程都以它为右端
triple = lambda k: (k - 1) * (k - 2) * (k - 3)


def fraction_text(value: Fraction) -> str:
    """把有理数格式化为 "p/q"（整数时为 "n"）"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def lambda_value(t: int, v: int, k: int, lam: int, i: int) -> Fraction:
    """λ_i = λ·C(v−i, t−i)/C(k−i, t−i)"""
    return Fraction(lam * comb(v - i, t - i), comb(k - i, t - i))


def floor_sqrt_plus(v: int, halves: int) -> int:
    """⌊√v + halves/2⌋，只用整数运算

    注意:
        halves 必须为奇数；m ≤ √v + halves/2 等价于 (2m − halves)² ≤ 4v。
    """
    return (isqrt(4 * v) + halves) // 2
