"""PSL(2,q) 子群在射影直线上的轨道分布

对 PSL(2,q) 的每一类子群（循环、二面体、初等交换、初等交换与循环的半直积、
A4、S4、A5、子域上的 PSL(2,q̄) 与 PGL(2,q̄)）给出轨道长度分布的闭式，
并能显式构造这些子群，用直接求轨道的方式作为对照。
"""

import random
from collections import Counter
from functools import lru_cache
from logging import debug
from math import gcd
from typing import Dict, List, Optional, Tuple

import galois
from sympy import divisors
from sympy.ntheory import n_order

from flagdesigns.core.gf import (
    determinant,
    element_power,
    field_build,
    galois_field,
    is_square,
    matrix_product,
    mobius_images,
    negate,
    primitive_element,
)
from flagdesigns.core.permcore import (
    PermGroup,
    compose,
    conjugate,
    make_permutation,
    orbits,
    perm_order,
)
from flagdesigns.models import DEFAULT_SEED, FieldSpec, OrbitProfile, Psl2Context, SubgroupSpec
from flagdesigns.utils.arith import prime_power
from flagdesigns.utils.errors import InputError, InternalConsistencyError, SubgroupAbsentError

# A4 / S4 / A5 的生成方式：二阶元 x、三阶元 y，且 xy 的阶为下表中的值
TRIANGLE_ORDERS: Dict[str, int] = {"a4": 3, "s4": 4, "a5": 5}

# 元素阶的分布，用来区分同阶的不同群
ELEMENT_ORDERS: Dict[str, Tuple[int, ...]] = {
    "a4": (1, 2, 3),
    "s4": (1, 2, 3, 4),
    "a5": (1, 2, 3, 5),
}

# 随机搜索 A4 / S4 / A5 时的最大尝试次数
MAX_TRIES = 20000


def psl2_context(q: int) -> Psl2Context:
    """q 的算术上下文

    Raises:
        InputError: q 不是素数幂或 q ≤ 3
    """
    pp = prime_power(q)
    if pp is None or q <= 3:
        raise InputError(f"q={q} must be a prime power greater than 3")
    p, e = pp
    n = 1 if p == 2 else 2

    def where(r: int) -> Optional[str]:
        if q % r == 0:
            return "char"
        if (q + 1) // n % r == 0:
            return "plus"
        if (q - 1) // n % r == 0:
            return "minus"
        return None

    return Psl2Context(q=q, p=p, e=e, n=n, q_mod4=q % 4, q_mod8=q % 8, three=where(3), five=where(5))


def _subfield_exponent(ctx: Psl2Context, qbar: Optional[int]) -> int:
    pp = prime_power(qbar) if qbar else None
    if pp is None or pp[0] != ctx.p or pp[1] > ctx.e:
        raise SubgroupAbsentError(f"{qbar} is not a power of {ctx.p} dividing q={ctx.q}")
    return pp[1]


def _require(spec: SubgroupSpec, *names: str) -> None:
    for name in names:
        if getattr(spec, name) is None:
            raise InputError(f"Subgroup {spec.kind} requires parameter {name}")


def validate_spec(ctx: Psl2Context, spec: SubgroupSpec) -> None:
    """检查子群类在 q 下是否存在

    Raises:
        SubgroupAbsentError: 子群类不存在
    """
    q, kind = ctx.q, spec.kind
    if kind in ("cyclic", "dihedral"):
        _require(spec, "c")
        if spec.c < 2 or (ctx.plus_half % spec.c and ctx.minus_half % spec.c):
            raise SubgroupAbsentError(f"{spec.c} divides neither (q+1)/n nor (q-1)/n for q={q}")
    elif kind == "ea":
        _require(spec, "qbar")
        _subfield_exponent(ctx, spec.qbar)
    elif kind == "semi":
        _require(spec, "qbar", "c")
        _subfield_exponent(ctx, spec.qbar)
        if spec.c < 2 or (spec.qbar - 1) % spec.c or ctx.minus_half % spec.c:
            raise SubgroupAbsentError(f"{spec.c} must divide {spec.qbar}-1 and (q-1)/n for q={q}")
    elif kind == "a4":
        if ctx.p == 2 and ctx.e % 2:
            raise SubgroupAbsentError(f"A4 requires q odd or an even power of 2, got q={q}")
    elif kind == "s4":
        if ctx.p == 2 or ctx.q_mod8 not in (1, 7):
            raise SubgroupAbsentError(f"S4 requires q odd with q = ±1 (mod 8), got q={q}")
    elif kind == "a5":
        if ctx.p == 2 or ctx.five is None:
            raise SubgroupAbsentError(f"A5 requires q odd with p=5 or 5 | q^2-1, got q={q}")
    elif kind in ("psl2", "pgl2"):
        _require(spec, "qbar", "m")
        f = _subfield_exponent(ctx, spec.qbar)
        if spec.qbar**spec.m != q or ctx.e % f:
            raise SubgroupAbsentError(f"{spec.qbar}^{spec.m} != q={q}")
        if kind == "pgl2" and spec.m % 2:
            raise SubgroupAbsentError(f"PGL(2,{spec.qbar}) lies in PSL(2,{q}) only for even m")


def subgroup_order(ctx: Psl2Context, spec: SubgroupSpec) -> int:
    kind = spec.kind
    if kind == "cyclic":
        return spec.c
    if kind == "dihedral":
        return 2 * spec.c
    if kind == "ea":
        return spec.qbar
    if kind == "semi":
        return spec.qbar * spec.c
    if kind in TRIANGLE_ORDERS:
        return {"a4": 12, "s4": 24, "a5": 60}[kind]
    qbar = spec.qbar
    if kind == "psl2":
        return qbar * (qbar * qbar - 1) // gcd(2, qbar - 1)
    return qbar * (qbar * qbar - 1)


def valid_specs(ctx: Psl2Context) -> List[SubgroupSpec]:
    """q 下存在的全部子群类（固定顺序）"""
    specs: List[SubgroupSpec] = []
    torus = sorted(set(divisors(ctx.plus_half)) | set(divisors(ctx.minus_half)))
    for kind in ("cyclic", "dihedral"):
        specs += [SubgroupSpec(kind=kind, c=int(c)) for c in torus if c >= 2]
    specs += [SubgroupSpec(kind="ea", qbar=ctx.p**f) for f in range(1, ctx.e + 1)]
    for f in range(1, ctx.e + 1):
        qbar = ctx.p**f
        specs += [
            SubgroupSpec(kind="semi", qbar=qbar, c=int(c))
            for c in divisors(gcd(qbar - 1, ctx.minus_half))
            if c >= 2
        ]
    for kind in TRIANGLE_ORDERS:
        try:
            validate_spec(ctx, SubgroupSpec(kind=kind))
        except SubgroupAbsentError:
            continue
        specs.append(SubgroupSpec(kind=kind))
    for f in divisors(ctx.e):
        m = ctx.e // f
        specs.append(SubgroupSpec(kind="psl2", qbar=ctx.p**f, m=m))
        if m % 2 == 0:
            specs.append(SubgroupSpec(kind="pgl2", qbar=ctx.p**f, m=m))
    return specs


def parse_subgroup(text: str, q: int) -> SubgroupSpec:
    """解析命令行语法 ``cyclic:c | dihedral:c | ea:qbar | semi:qbar:c | a4 | s4 | a5 | psl2:qbar | pgl2:qbar``

    Raises:
        InputError: 语法错误
    """
    parts = text.strip().lower().split(":")
    kind, args = parts[0], parts[1:]
    arity = {"cyclic": 1, "dihedral": 1, "ea": 1, "semi": 2, "a4": 0, "s4": 0, "a5": 0, "psl2": 1, "pgl2": 1}
    if kind not in arity or len(args) != arity[kind]:
        raise InputError(f"Cannot parse subgroup {text!r}")
    try:
        numbers = [int(a) for a in args]
    except ValueError:
        raise InputError(f"Cannot parse subgroup {text!r}") from None
    if kind in ("cyclic", "dihedral"):
        return SubgroupSpec(kind=kind, c=numbers[0])
    if kind == "ea":
        return SubgroupSpec(kind=kind, qbar=numbers[0])
    if kind == "semi":
        return SubgroupSpec(kind=kind, qbar=numbers[0], c=numbers[1])
    if kind in ("psl2", "pgl2"):
        qbar, m, power = numbers[0], 1, numbers[0]
        while 1 < qbar and power < q:
            power *= qbar
            m += 1
        return SubgroupSpec(kind=kind, qbar=qbar, m=m)
    return SubgroupSpec(kind=kind)


# parse_subgroup 的逆
format_subgroup = lambda spec: spec.label


def closed_form_profile(ctx: Psl2Context, spec: SubgroupSpec) -> OrbitProfile:
    """子群类在射影直线上的轨道分布（闭式）

    Raises:
        SubgroupAbsentError: 子群类在 q 下不存在
        InternalConsistencyError: 分支不可达或总点数不等于 q+1
    """
    validate_spec(ctx, spec)
    counts = _profile_counts(ctx, spec)
    mass = sum(length * count for length, count in counts.items())
    if mass != ctx.q + 1 or any(n < 0 for n in counts.values()):
        raise InternalConsistencyError(f"Profile {counts} of {spec.label} does not cover {ctx.q + 1} points")
    return OrbitProfile(counts=counts)


def _profile_counts(ctx: Psl2Context, spec: SubgroupSpec) -> Dict[int, int]:
    q, kind = ctx.q, spec.kind
    if kind == "cyclic":
        c = spec.c
        if ctx.plus_half % c == 0:
            return {c: (q + 1) // c}
        return {1: 2, c: (q - 1) // c}
    if kind == "dihedral":
        return _dihedral_counts(ctx, spec.c)
    if kind == "ea":
        return {1: 1, spec.qbar: q // spec.qbar}
    if kind == "semi":
        qbar, c = spec.qbar, spec.c
        return _merge({1: 1}, {qbar: 1}, {c * qbar: (q - qbar) // (c * qbar)})
    if kind == "a4":
        return _a4_counts(ctx)
    if kind == "s4":
        return _s4_counts(ctx)
    if kind == "a5":
        return _a5_counts(ctx)
    qbar, order = spec.qbar, subgroup_order(ctx, spec)
    counts = {qbar + 1: 1}
    rest = q - qbar
    if spec.m % 2 == 0:
        counts = _merge(counts, {qbar * (qbar - 1): 1})
        rest -= qbar * (qbar - 1)
    if rest % order:
        raise InternalConsistencyError(f"{rest} points left over for a group of order {order}")
    return _merge(counts, {order: rest // order})


def _merge(*parts: Dict[int, int]) -> Dict[int, int]:
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return dict(total)


def _dihedral_counts(ctx: Psl2Context, c: int) -> Dict[int, int]:
    q = ctx.q
    plus = ctx.plus_half % c == 0
    if ctx.p == 2:
        if plus:
            return _merge({c: 1}, {2 * c: (q + 1 - c) // (2 * c)})
        return _merge({2: 1}, {c: 1}, {2 * c: (q - 1 - c) // (2 * c)})
    if ctx.q_mod4 == 1:
        if plus:
            return _merge({c: 2}, {2 * c: (q + 1 - 2 * c) // (2 * c)})
        if c == 2:
            return {2: 3, 4: (q - 5) // 4}
        return _merge({2: 1}, {c: 2}, {2 * c: (q - 1 - 2 * c) // (2 * c)})
    if ctx.q_mod4 == 3:
        if plus:
            return {2 * c: (q + 1) // (2 * c)}
        return _merge({2: 1}, {2 * c: (q - 1) // (2 * c)})
    raise InternalConsistencyError(f"No dihedral branch for q={q}")


def _a4_counts(ctx: Psl2Context) -> Dict[int, int]:
    q = ctx.q
    if ctx.p == 2:
        return {1: 1, 4: 1, 12: (q - 4) // 12}
    table = {
        (1, "plus"): {6: 1, 12: (q - 5) // 12},
        (1, "minus"): {4: 2, 6: 1, 12: (q - 13) // 12},
        (1, "char"): {4: 1, 6: 1, 12: (q - 9) // 12},
        (3, "plus"): {12: (q + 1) // 12},
        (3, "minus"): {4: 2, 12: (q - 7) // 12},
        (3, "char"): {4: 1, 12: (q - 3) // 12},
    }
    return _branch(table, (ctx.q_mod4, ctx.three), "A4", q)


def _s4_counts(ctx: Psl2Context) -> Dict[int, int]:
    q = ctx.q
    table = {
        (1, "plus"): {6: 1, 12: 1, 24: (q - 17) // 24},
        (1, "minus"): {6: 1, 8: 1, 12: 1, 24: (q - 25) // 24},
        (1, "char"): {4: 1, 6: 1, 24: (q - 9) // 24},
        (7, "plus"): {24: (q + 1) // 24},
        (7, "minus"): {8: 1, 24: (q - 7) // 24},
    }
    return _branch(table, (ctx.q_mod8, ctx.three), "S4", q)


def _a5_counts(ctx: Psl2Context) -> Dict[int, int]:
    q = ctx.q
    if ctx.p == 5:
        if ctx.e % 2:
            return {6: 1, 60: (q - 5) // 60}
        return {6: 1, 20: 1, 60: (q - 25) // 60}
    if ctx.p == 3:
        table = {
            "plus": {10: 1, 60: (q - 9) // 60},
            "minus": {10: 1, 12: 1, 60: (q - 21) // 60},
        }
        return _branch(table, ctx.five, "A5", q)
    table = {
        (1, "plus", "plus"): {30: 1, 60: (q - 29) // 60},
        (1, "plus", "minus"): {12: 1, 30: 1, 60: (q - 41) // 60},
        (1, "minus", "plus"): {20: 1, 30: 1, 60: (q - 49) // 60},
        (1, "minus", "minus"): {12: 1, 20: 1, 30: 1, 60: (q - 61) // 60},
        (3, "plus", "plus"): {60: (q + 1) // 60},
        (3, "plus", "minus"): {12: 1, 60: (q - 11) // 60},
        (3, "minus", "plus"): {20: 1, 60: (q - 19) // 60},
        (3, "minus", "minus"): {12: 1, 20: 1, 60: (q - 31) // 60},
    }
    return _branch(table, (ctx.q_mod4, ctx.three, ctx.five), "A5", q)


def _branch(table: dict, key, name: str, q: int) -> Dict[int, int]:
    if key not in table:
        raise InternalConsistencyError(f"No {name} branch for q={q} (key {key})")
    return table[key]


@lru_cache(maxsize=None)
def _nonsplit_torus(fs: FieldSpec) -> Tuple[int, int, int]:
    """非分裂环面：返回 (s, t, a)，X² − sX − t 在 GF(q) 上不可约，
    且矩阵 [[a, t], [1, a+s]] 在 PGL(2,q) 中的阶为 q+1
    """
    GF = galois_field(fs)
    q = fs.q
    s, t = next(
        (s, t)
        for s in range(q)
        for t in range(1, q)
        if galois.Poly([1, int(-GF(s)), int(-GF(t))], field=GF).is_irreducible()
    )
    for a in range(q):
        images = mobius_images(fs, a, t, 1, int(GF(a) + GF(s)))
        if perm_order(make_permutation(images)) == q + 1:
            return s, t, a
    raise InternalConsistencyError(f"No element of order {q + 1} found in PGL(2,{q})")


def _nonsplit_matrix(fs: FieldSpec) -> List[int]:
    s, t, a = _nonsplit_torus(fs)
    GF = galois_field(fs)
    return [a, t, 1, int(GF(a) + GF(s))]


def _matrix_power(fs: FieldSpec, matrix: List[int], exponent: int) -> List[int]:
    result = [1, 0, 0, 1]
    for _ in range(exponent):
        result = matrix_product(fs, result, matrix)
    return result


def _torus_generator(ctx: Psl2Context, fs: FieldSpec, c: int):
    """PSL(2,q) 中 c 阶循环子群的生成元（c 整除 (q±1)/n）"""
    if ctx.plus_half % c == 0:
        g = make_permutation(mobius_images(fs, *_matrix_power(fs, _nonsplit_matrix(fs), ctx.n)))
        return g ** (ctx.plus_half // c)
    omega2 = element_power(fs, primitive_element(fs), 2)
    return make_permutation(mobius_images(fs, omega2, 0, 0, 1)) ** (ctx.minus_half // c)


def _reflection(ctx: Psl2Context, fs: FieldSpec, plus: bool):
    if not plus:
        return make_permutation(mobius_images(fs, 0, negate(fs, 1), 1, 0))
    s, _, _ = _nonsplit_torus(fs)
    sigma = [1, s, 0, negate(fs, 1)]
    matrix = _nonsplit_matrix(fs)
    for j in range(2):
        candidate = matrix_product(fs, sigma, _matrix_power(fs, matrix, j))
        if is_square(fs, determinant(fs, candidate)):
            return make_permutation(mobius_images(fs, *candidate))
    raise InternalConsistencyError(f"No reflection of the nonsplit torus inside PSL(2,{ctx.q})")


def construct_subgroup(ctx: Psl2Context, spec: SubgroupSpec, seed: int = DEFAULT_SEED) -> PermGroup:
    """显式构造子群类的一个代表

    A4 / S4 / A5 用固定种子的随机搜索得到；所有结果都检查阶（以及元素阶分布）。

    Raises:
        SubgroupAbsentError: 子群类不存在
        InternalConsistencyError: 构造结果不满足后置条件
    """
    validate_spec(ctx, spec)
    fs = field_build(ctx.p, ctx.e)
    degree = ctx.q + 1
    omega = primitive_element(fs)
    kind = spec.kind
    if kind in TRIANGLE_ORDERS:
        group = _triangle_search(ctx, fs, kind, seed)
    elif kind in ("cyclic", "dihedral"):
        plus = ctx.plus_half % spec.c == 0
        gens = [_torus_generator(ctx, fs, spec.c)]
        if kind == "dihedral":
            gens.append(_reflection(ctx, fs, plus))
        group = PermGroup(degree, gens)
    elif kind in ("ea", "semi"):
        f = _subfield_exponent(ctx, spec.qbar)
        g = n_order(ctx.p, spec.c) if kind == "semi" else 1
        zeta = element_power(fs, omega, (ctx.q - 1) // (ctx.p**g - 1))
        shifts = [
            int(galois_field(fs)(element_power(fs, zeta, j)) * galois_field(fs)(element_power(fs, omega, i)))
            for i in range(f // g)
            for j in range(g)
        ]
        gens = [mobius_images(fs, 1, shift, 0, 1) for shift in shifts]
        if kind == "semi":
            mu = element_power(fs, omega, (ctx.q - 1) // spec.c)
            gens.append(mobius_images(fs, mu, 0, 0, 1))
        group = PermGroup(degree, gens)
    else:
        omega_bar = element_power(fs, omega, (ctx.q - 1) // (spec.qbar - 1))
        gens = [
            mobius_images(fs, 1, 1, 0, 1),
            mobius_images(fs, 0, negate(fs, 1), 1, 0),
            mobius_images(fs, element_power(fs, omega_bar, 2), 0, 0, 1),
        ]
        if kind == "pgl2":
            gens.append(mobius_images(fs, omega_bar, 0, 0, 1))
        group = PermGroup(degree, gens)
    expected = subgroup_order(ctx, spec)
    if group.order != expected:
        raise InternalConsistencyError(f"Constructed {spec.label} at q={ctx.q} has order {group.order}, expected {expected}")
    debug(f"Constructed {spec.label} at q={ctx.q}")
    return group


def _random_matrix(rng: random.Random, fs: FieldSpec) -> List[int]:
    while True:
        matrix = [rng.randrange(fs.q) for _ in range(4)]
        if determinant(fs, matrix):
            return matrix


def _triangle_search(ctx: Psl2Context, fs: FieldSpec, kind: str, seed: int) -> PermGroup:
    """寻找二阶元 x 与三阶元 y，使 xy 的阶等于 TRIANGLE_ORDERS[kind]"""
    rng = random.Random(f"{seed}:{ctx.q}:{kind}")
    involution = make_permutation(mobius_images(fs, 0, negate(fs, 1), 1, 0))
    order3 = make_permutation(mobius_images(fs, 0, negate(fs, 1), 1, 1))
    target = TRIANGLE_ORDERS[kind]
    for attempt in range(MAX_TRIES):
        x = conjugate(involution, make_permutation(mobius_images(fs, *_random_matrix(rng, fs))))
        y = conjugate(order3, make_permutation(mobius_images(fs, *_random_matrix(rng, fs))))
        if perm_order(compose(x, y)) != target:
            continue
        group = PermGroup(ctx.q + 1, [x, y])
        census = tuple(sorted({perm_order(g) for g in group.as_sympy().generate()}))
        if census != ELEMENT_ORDERS[kind]:
            raise InternalConsistencyError(f"{kind.upper()} candidate at q={ctx.q} has element orders {census}")
        debug(f"Found {kind.upper()} at q={ctx.q} after {attempt + 1} attempts")
        return group
    raise InternalConsistencyError(f"No {kind.upper()} found in PSL(2,{ctx.q}) after {MAX_TRIES} attempts")


def brute_profile(subgroup: PermGroup) -> OrbitProfile:
    """直接求轨道得到的轨道分布"""
    return OrbitProfile(counts=dict(Counter(len(o) for o in orbits(subgroup))))
