"""StabilizerHypothesis 模块 - 区组稳定子假设"""

from pydantic import BaseModel, ConfigDict, model_validator
from typing import Literal, Optional

from flagdesigns.models.subgroup_spec import SubgroupSpec

# 方程变体：G = PSL(2,q)、PSL(2,q) 在 G 中指数为 2（p 奇）、p = 2 且含域自同构
EquationVariant = Literal["simple", "extended", "char2"]


class StabilizerHypothesis(BaseModel):
    """关于 PSL(2,q)_B 的一个假设

    属性:
        spec: PSL(2,q)_B 的子群类
        spec_order: 该子群类的阶
        pointwise_order: |PSL(2,q)_{0B}|
        orbit_multiplier: k 与 0 在 PSL(2,q)_B 下轨道长度之比（1、2 或 s）
        variant: 方程变体
        s: 域自同构部分的素数阶（仅 char2）
        k: 区组大小
    """

    model_config = ConfigDict(frozen=True)

    spec: SubgroupSpec
    spec_order: int
    pointwise_order: int
    orbit_multiplier: int = 1
    variant: EquationVariant = "simple"
    s: Optional[int] = None
    k: int

    @model_validator(mode="after")
    def _check_k(self) -> "StabilizerHypothesis":
        if self.spec_order % self.pointwise_order:
            raise ValueError("Pointwise order must divide the subgroup order")
        if self.k != self.spec_order // self.pointwise_order * self.orbit_multiplier:
            raise ValueError("Block size does not match orbit length and multiplier")
        if (self.variant == "char2") != (self.s is not None):
            raise ValueError("Field automorphism order is required exactly for char2")
        return self

    @property
    def orbit_length(self) -> int:
        return self.spec_order // self.pointwise_order
