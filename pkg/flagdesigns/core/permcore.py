"""置换群内核

基于 sympy.combinatorics 的精确置换群计算：轨道、点稳定子、
稳定子链（基与强生成元）求阶、传递度，以及在区组和旗上的诱导作用。

点一律以 0 起始编号。稳定子链的基按点的升序选取，
因此同一组生成元得到的稳定子生成元是可复现的。
"""

from collections import deque
from functools import reduce
from logging import debug
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.util import _distribute_gens_by_base

from flagdesigns.models import Flag
from flagdesigns.utils.errors import InputError, NotAutomorphismError

# 支持的最大点数
MAX_DEGREE = 1 << 16

PermLike = Union[Permutation, Sequence[int]]


def make_permutation(images: Sequence[int]) -> Permutation:
    """由像数组构造置换，并检查它是 0..m−1 上的双射

    Raises:
        InputError: 像数组不是双射
    """
    images = [int(x) for x in images]
    if sorted(images) != list(range(len(images))):
        raise InputError(f"Images do not form a bijection on 0..{len(images) - 1}")
    return Permutation(images)


identity = lambda degree: Permutation(list(range(degree)))

# (f∘g)(x) = f(g(x))；sympy 的乘法是先左后右
compose = lambda f, g: g * f

perm_order = lambda g: int(g.order())


class PermGroup:
    """由生成元给出的置换群

    群阶在第一次访问时经稳定子链计算，之后不再变化。
    """

    def __init__(self, degree: int, generators: Iterable[PermLike]) -> None:
        """初始化置换群

        Args:
            degree (int): 点数
            generators (Iterable[PermLike]): 生成元（Permutation 或像数组）；为空时视为平凡群

        Raises:
            InputError: 点数越界或生成元点数不一致
        """
        if degree < 1 or degree > MAX_DEGREE:
            raise InputError(f"Degree {degree} outside 1..{MAX_DEGREE}")
        perms: List[Permutation] = []
        for gen in generators:
            perm = gen if isinstance(gen, Permutation) else make_permutation(gen)
            if perm.size != degree:
                raise InputError(f"Generator of degree {perm.size} in a group of degree {degree}")
            perms.append(perm)
        if not perms:
            perms.append(identity(degree))
        self.degree: int = degree  # 点数
        self.generators: Tuple[Permutation, ...] = tuple(perms)  # 生成元
        self._sympy = PermutationGroup(list(perms))
        self._order: Optional[int] = None
        self._chains: Dict[Tuple[int, ...], Tuple[List[int], List[List[Permutation]]]] = {}

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    @property
    def order(self) -> int:
        if self._order is None:
            base, levels = self.chain()
            self._order = prod(
                len(PermutationGroup(level).orbit(point)) for point, level in zip(base, levels)
            )
            debug(f"Order of {self!r} is {self._order}")
        return self._order

    def as_sympy(self) -> PermutationGroup:
        return self._sympy

    def chain(self, prefix: Sequence[int] = ()) -> Tuple[List[int], List[List[Permutation]]]:
        """以 prefix 开头的稳定子链

        Returns:
            Tuple: (基, 每一层的强生成元)；第 i 层固定 base[:i] 的每个点
        """
        key = tuple(prefix)
        if key not in self._chains:
            base, strong = self._sympy.schreier_sims_incremental(base=list(key))
            strong = [g for g in strong if not g.is_Identity] or [identity(self.degree)]
            levels = _distribute_gens_by_base(base, strong) if base else []
            self._chains[key] = (list(base), levels)
        return self._chains[key]

    def images(self) -> List[List[int]]:
        return [list(g.array_form) for g in self.generators]


def _check_point(group: PermGroup, x: int) -> None:
    if not 0 <= x < group.degree:
        raise InputError(f"Point {x} outside 0..{group.degree - 1}")


def orbit(group: PermGroup, seed: int) -> set:
    """包含 seed 的最小生成元封闭集"""
    _check_point(group, seed)
    return {int(x) for x in group.as_sympy().orbit(seed)}


def orbits(group: PermGroup) -> List[List[int]]:
    """全部轨道，每条轨道升序，轨道按最小元排序"""
    return sorted(sorted(int(x) for x in o) for o in group.as_sympy().orbits())


group_order = lambda group: group.order


def point_stabilizer(group: PermGroup, x: int) -> PermGroup:
    """点 x 的稳定子，生成元取自以 x 开头的稳定子链"""
    _check_point(group, x)
    base, levels = group.chain((x,))
    if len(base) < 2:
        return PermGroup(group.degree, [])
    return PermGroup(group.degree, levels[1])


def transitivity_degree(group: PermGroup, max_t: int) -> int:
    """不超过 max_t 的最大 t，使群 t 重传递

    依次检查固定 0..i−1 的稳定子在其余点上是否传递。
    """
    if max_t > group.degree:
        raise InputError(f"max_t={max_t} exceeds degree {group.degree}")
    if max_t < 1:
        return 0
    base, levels = group.chain(tuple(range(max_t)))
    for i in range(max_t):
        if len(PermutationGroup(levels[i]).orbit(base[i])) != group.degree - i:
            return i
    return max_t


def set_image(g: Permutation, points: Sequence[int]) -> Tuple[int, ...]:
    """{g(x) : x ∈ S}，重新排序"""
    images = g.array_form
    if any(not 0 <= x < len(images) for x in points):
        raise InputError(f"Point set {tuple(points)} outside 0..{len(images) - 1}")
    return tuple(sorted(images[x] for x in points))


def block_action(group: PermGroup, blocks: Sequence[Tuple[int, ...]]) -> List[List[int]]:
    """每个生成元在区组下标上的诱导置换

    Raises:
        NotAutomorphismError: 某个生成元把区组映成非区组
    """
    index = {block: i for i, block in enumerate(blocks)}
    actions = []
    for n, gen in enumerate(group.generators):
        mapping = []
        for block in blocks:
            image = index.get(set_image(gen, block))
            if image is None:
                raise NotAutomorphismError(f"Generator {n} maps block {block} outside the block set")
            mapping.append(image)
        actions.append(mapping)
    return actions


def block_orbit_length(group: PermGroup, blocks: Sequence[Tuple[int, ...]], b: int = 0) -> int:
    actions = block_action(group, blocks)
    return len(_closure([b], lambda i: (action[i] for action in actions)))


def flag_orbit(group: PermGroup, blocks: Sequence[Tuple[int, ...]], flag: Flag) -> int:
    """旗 (x, B) 在诱导旗作用下的轨道长度"""
    if flag.x not in blocks[flag.b]:
        raise InputError(f"Point {flag.x} is not on block {flag.b}")
    actions = block_action(group, blocks)
    arrays = [g.array_form for g in group.generators]
    step = lambda fl: ((arr[fl[0]], act[fl[1]]) for arr, act in zip(arrays, actions))
    return len(_closure([(flag.x, flag.b)], step))


def _closure(seeds, step) -> set:
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        for image in step(queue.popleft()):
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """h∘g∘h⁻¹"""
    return reduce(compose, (h, g, ~h))
