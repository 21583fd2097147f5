"""IncidenceStructure 模块 - 关联结构（点集 0..v−1 与区组表）"""

from pydantic import BaseModel, ConfigDict, model_validator
from typing import Dict, Tuple


class IncidenceStructure(BaseModel):
    """关联结构 D = (X, 𝓑, I)

    区组是严格递增的 k 元组；入库时即拒绝重复区组，不做静默合并。

    属性:
        v: 点数
        blocks: 区组列表（按字典序排列）
    """

    model_config = ConfigDict(frozen=True)

    v: int
    blocks: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_blocks(self) -> "IncidenceStructure":
        if self.v < 1:
            raise ValueError("Point count must be positive")
        if not self.blocks:
            raise ValueError("No blocks provided")
        size = len(self.blocks[0])
        for block in self.blocks:
            if len(block) != size:
                raise ValueError(f"Block {block} has size {len(block)}, expected {size}")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise ValueError(f"Block {block} is not strictly sorted")
            if block[0] < 0 or block[-1] >= self.v:
                raise ValueError(f"Block {block} leaves the point range 0..{self.v - 1}")
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("Duplicate blocks are not accepted")
        return self

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def b(self) -> int:
        return len(self.blocks)

    def index(self) -> Dict[Tuple[int, ...], int]:
        """区组到下标的映射"""
        return {block: i for i, block in enumerate(self.blocks)}
