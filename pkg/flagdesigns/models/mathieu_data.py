"""MathieuData 模块 - 内置 Mathieu 群生成元"""

from pydantic import BaseModel
from typing import List


class MathieuData(BaseModel):
    """内置的 Mathieu 群数据

    属性:
        degree: 作用点数（11 或 23）
        generators: 生成元像数组（0 起始）
        expected_order: 期望阶
        expected_transitivity: 期望传递度
    """

    degree: int
    generators: List[List[int]]
    expected_order: int
    expected_transitivity: int = 4
