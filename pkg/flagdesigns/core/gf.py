"""有限域与射影直线

用 galois 构造确定性的 GF(p^e)：定义多项式取字典序最小的首一不可约多项式，
元素按系数向量的 p 进制计数顺序编号（即 galois 的整数表示）。
射影直线 PG(1,q) 的点编号为 0..q，其中 q 表示 ∞，i < q 表示编号为 i 的域元素。
"""

from functools import lru_cache
from logging import debug
from typing import List, Sequence

import galois
import numpy as np
from sympy import isprime

from flagdesigns.core.permcore import PermGroup, make_permutation
from flagdesigns.models import FieldSpec
from flagdesigns.utils.errors import InputError, InternalConsistencyError

# 支持的最大域阶
MAX_FIELD_ORDER = 1 << 16


@lru_cache(maxsize=None)
def field_build(p: int, e: int) -> FieldSpec:
    """构造 GF(p^e) 的描述

    Args:
        p (int): 特征，必须为素数
        e (int): 扩张次数，至少为 1

    Returns:
        FieldSpec: 定义多项式为字典序最小的 e 次首一不可约多项式

    Raises:
        InputError: p 不是素数、e < 1 或 p^e 过大
        InternalConsistencyError: 得到的多项式未通过不可约性检验

    示例:
        >>> field_build(2, 2).modulus
        (1, 1, 1)
    """
    if not isprime(p):
        raise InputError(f"Characteristic {p} is not a prime")
    if e < 1 or p**e > MAX_FIELD_ORDER:
        raise InputError(f"Field order {p}^{e} outside 2..{MAX_FIELD_ORDER}")
    poly = galois.irreducible_poly(p, e, method="min")
    if not poly.is_irreducible():
        raise InternalConsistencyError(f"Polynomial {poly} over GF({p}) is reducible")
    modulus = tuple(int(c) for c in poly.coeffs)
    debug(f"GF({p}^{e}) defined by {poly}")
    return FieldSpec(p=p, e=e, q=p**e, modulus=modulus)


@lru_cache(maxsize=None)
def galois_field(fs: FieldSpec) -> type:
    """FieldSpec 对应的 galois 域类"""
    if fs.e == 1:
        return galois.GF(fs.p)
    poly = galois.Poly(list(fs.modulus), field=galois.GF(fs.p))
    return galois.GF(fs.q, irreducible_poly=poly)


def primitive_element(fs: FieldSpec) -> int:
    """最小的本原元（整数编号）"""
    return int(galois_field(fs).primitive_element)


def is_square(fs: FieldSpec, a: int) -> bool:
    return bool(galois_field(fs)(a).is_square())


def element_power(fs: FieldSpec, a: int, exponent: int) -> int:
    return int(galois_field(fs)(a) ** exponent)


def negate(fs: FieldSpec, a: int) -> int:
    return int(-galois_field(fs)(a))


def mobius_images(fs: FieldSpec, a: int, b: int, c: int, d: int) -> List[int]:
    """矩阵 [[a, b], [c, d]] 在射影直线上的作用

    齐次坐标 (x : 1) ↦ (ax + b : cx + d)，(1 : 0) ↦ (a : c)；
    分母为零的点映到 ∞（编号 q）。

    Raises:
        InputError: 矩阵奇异
    """
    GF = galois_field(fs)
    q = fs.q
    a, b, c, d = GF(a), GF(b), GF(c), GF(d)
    if a * d - b * c == 0:
        raise InputError("Matrix is singular")
    x = GF.elements
    num = a * x + b
    den = c * x + d
    finite = den != 0
    images = np.full(q + 1, q, dtype=np.int64)
    head = images[:q]
    head[finite] = (num[finite] / den[finite]).view(np.ndarray)
    images[q] = int(a / c) if c != 0 else q
    return images.tolist()


def mobius_perm(fs: FieldSpec, a: int, b: int, c: int, d: int):
    return make_permutation(mobius_images(fs, a, b, c, d))


def matrix_product(fs: FieldSpec, left: Sequence[int], right: Sequence[int]) -> List[int]:
    """两个 2×2 矩阵（行优先的 4 元组）之积"""
    GF = galois_field(fs)
    product = GF(np.array(left).reshape(2, 2)) @ GF(np.array(right).reshape(2, 2))
    return [int(x) for x in product.flatten()]


def determinant(fs: FieldSpec, matrix: Sequence[int]) -> int:
    GF = galois_field(fs)
    a, b, c, d = (GF(x) for x in matrix)
    return int(a * d - b * c)


def _check_supported(fs: FieldSpec) -> None:
    if fs.q <= 3:
        raise InputError(f"PSL(2,{fs.q}) is not supported, q must exceed 3")


def psl2_generators(fs: FieldSpec) -> List[List[int]]:
    """PSL(2,q) 的生成元：x ↦ x+1、x ↦ −1/x、x ↦ ω²x"""
    omega = primitive_element(fs)
    return [
        mobius_images(fs, 1, 1, 0, 1),
        mobius_images(fs, 0, negate(fs, 1), 1, 0),
        mobius_images(fs, element_power(fs, omega, 2), 0, 0, 1),
    ]


def psl2_group(fs: FieldSpec) -> PermGroup:
    """PSL(2,q) 在 q+1 个射影点上的作用

    Raises:
        InputError: q ≤ 3
    """
    _check_supported(fs)
    return PermGroup(fs.q + 1, psl2_generators(fs))


def pgl2_group(fs: FieldSpec) -> PermGroup:
    """PGL(2,q)：在 PSL(2,q) 生成元之外加入 x ↦ ωx"""
    _check_supported(fs)
    omega = primitive_element(fs)
    return PermGroup(fs.q + 1, psl2_generators(fs) + [mobius_images(fs, omega, 0, 0, 1)])


def frobenius_perm(fs: FieldSpec):
    """x ↦ x^p 诱导的射影点置换，固定 ∞"""
    GF = galois_field(fs)
    images = (GF.elements**fs.p).view(np.ndarray).tolist() + [fs.q]
    return make_permutation(images)
