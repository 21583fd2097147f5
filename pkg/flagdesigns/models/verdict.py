"""Verdict 模块 - 检查结论"""

from pydantic import BaseModel
from typing import List, Optional


class Verdict(BaseModel):
    """一次检查的结论

    属性:
        passed: 是否通过
        reason: 失败原因或说明
        witness: 反例（例如被覆盖 0 次或 2 次的 t 元子集）
        value: 附带的数值（例如旗轨道长度）
    """

    passed: bool
    reason: str = ""
    witness: Optional[List[int]] = None
    value: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed

    @property
    def label(self) -> str:
        return "PASS" if self.passed else "FAIL"
