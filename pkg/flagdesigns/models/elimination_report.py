"""EliminationReport 模块 - 分类报告

报告序列化为 ReportEntry 的 JSON 数组。
"""

from pydantic import BaseModel, TypeAdapter
from typing import List, Tuple

from flagdesigns.models.report_entry import ReportEntry

# 报告的 JSON 形式是顶层数组，使用 TypeAdapter 读写
ENTRIES_ADAPTER = TypeAdapter(List[ReportEntry])


class EliminationReport(BaseModel):
    """分类报告

    属性:
        entries: 报告条目，按规范顺序（族顺序，其次参数升序）
    """

    entries: List[ReportEntry] = []

    def survivors(self) -> List[ReportEntry]:
        return [entry for entry in self.entries if entry.verdict == "Survivor"]

    def survivor_keys(self) -> List[Tuple[str, Tuple[Tuple[str, int], ...]]]:
        return [entry.sort_key() for entry in self.survivors()]

    def count(self, verdict: str) -> int:
        return sum(1 for entry in self.entries if entry.verdict == verdict)

    def to_json(self) -> bytes:
        return ENTRIES_ADAPTER.dump_json(self.entries, indent=2)

    @classmethod
    def from_json(cls, data) -> "EliminationReport":
        return cls(entries=ENTRIES_ADAPTER.validate_json(data))
