"""ReportEntry 模块 - 分类报告中的一条记录"""

from pydantic import BaseModel
from typing import Any, Dict, Literal, Optional

VerdictKind = Literal["Survivor", "EliminatedMechanized", "EliminatedCited"]


class ReportEntry(BaseModel):
    """一条 (族, 参数) 的结论

    属性:
        family: 族标签
        params: 参数（仅整数）
        verdict: Survivor / EliminatedMechanized / EliminatedCited
        rule: 排除所用的规则名
        witness: 见证数据（整数或有理数文本，不含浮点数）
        citation: 引用台账中的键（EliminatedCited 必填，其余可作佐证）
    """

    family: str
    params: Dict[str, int]
    verdict: VerdictKind
    rule: str
    witness: Dict[str, Any] = {}
    citation: Optional[str] = None

    def sort_key(self):
        return (self.family, tuple(sorted(self.params.items())))
