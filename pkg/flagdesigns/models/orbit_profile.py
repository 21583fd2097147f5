"""OrbitProfile 模块 - 轨道长度分布"""

from pydantic import BaseModel, ConfigDict, field_validator
from typing import Dict, List, Tuple


class OrbitProfile(BaseModel):
    """子群在射影直线上的轨道长度分布 {ℓ ↦ N_ℓ}

    只保存 N_ℓ > 0 的长度，因此两个分布相等当且仅当字典相等。

    属性:
        counts: 轨道长度到轨道个数的映射
    """

    model_config = ConfigDict(frozen=True)

    counts: Dict[int, int]

    @field_validator("counts")
    @classmethod
    def _drop_empty(cls, counts: Dict[int, int]) -> Dict[int, int]:
        for length, count in counts.items():
            if length < 1 or count < 0:
                raise ValueError(f"Invalid orbit entry {length}:{count}")
        return {length: counts[length] for length in sorted(counts) if counts[length] > 0}

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))

    @property
    def fixed_points(self) -> int:
        return self.counts.get(1, 0)

    @property
    def mass(self) -> int:
        """Σ ℓ·N_ℓ"""
        return sum(length * count for length, count in self.counts.items())

    def pairs(self) -> List[Tuple[int, int]]:
        return list(self.counts.items())

    def format(self) -> List[str]:
        return [f"{length}:{count}" for length, count in self.counts.items()]
