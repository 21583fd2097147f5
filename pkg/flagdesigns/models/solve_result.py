"""SolveResult 模块 - 区组稳定子方程的求解结果"""

from pydantic import BaseModel
from typing import Literal, Optional


class SolveResult(BaseModel):
    """方程 (q−2)·P·n = (k−1)(k−2)(k−3)（及其变体）的求解结果

    属性:
        q: 解出的素数幂 q（无解时为 None）
        reason: 无解原因：non-integer / not a prime power / n mismatch
        rejected_by: 解出 q 后子群类不存在的说明
    """

    q: Optional[int] = None
    reason: Optional[Literal["non-integer", "not a prime power", "n mismatch"]] = None
    rejected_by: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.q is not None and self.rejected_by is None
