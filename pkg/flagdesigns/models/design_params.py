"""DesignParams 模块 - t-(v,k,λ) 参数与 λ 链

包含 ChainEntry 与 DesignParams 两个模型。
"""

from pydantic import BaseModel, ConfigDict
from typing import Dict, Optional, Tuple


class ChainEntry(BaseModel):
    """λ 链中的一项

    属性:
        i: 下标（λ_0 = b，λ_1 = r）
        value: 精确有理数文本，例如 "273819/4"
        integral: 是否为整数
    """

    model_config = ConfigDict(frozen=True)

    i: int
    value: str
    integral: bool


class DesignParams(BaseModel):
    """t-(v,k,λ) 设计的参数与导出链

    属性:
        t, v, k, lam: 设计参数
        chain: λ_0..λ_t，按下标升序
        pair_divisibility_ok: t=4 时 (k−2)(k−3) | (v−2)(v−3) 的结论，其余为 None
    """

    model_config = ConfigDict(frozen=True)

    t: int
    v: int
    k: int
    lam: int
    chain: Tuple[ChainEntry, ...]
    pair_divisibility_ok: Optional[bool] = None

    @property
    def admissible(self) -> bool:
        """全部 λ_i 为整数"""
        return all(entry.integral for entry in self.chain)

    @property
    def b(self) -> Optional[int]:
        return int(self.chain[0].value) if self.chain[0].integral else None

    @property
    def r(self) -> Optional[int]:
        return int(self.chain[1].value) if self.chain[1].integral else None

    @property
    def lambda2(self) -> Optional[int]:
        if self.t < 2:
            return None
        return int(self.chain[2].value) if self.chain[2].integral else None

    def value(self, i: int) -> str:
        return self.chain[i].value

    def failures(self) -> Dict[str, str]:
        """非整数项，键为 lambda_i，按下标降序（最先检查的高阶项在前）"""
        return {
            f"lambda_{entry.i}": entry.value
            for entry in reversed(self.chain)
            if not entry.integral
        }

    def first_failure(self) -> Optional[int]:
        """从 λ_t 向 λ_0 扫描时第一个非整数项的下标"""
        for entry in reversed(self.chain):
            if not entry.integral:
                return entry.i
        return None
