"""GroupFamilyCase 模块 - 二重传递群族表中的一项"""

from pydantic import BaseModel, ConfigDict
from typing import Literal

FamilyTag = Literal[
    "AffineGammaL1",
    "AffineSL",
    "AffineSp",
    "AffineG2",
    "AffineSporadic",
    "Alt",
    "PSLd",
    "PSU3",
    "Sz",
    "Ree",
    "Sp2d2",
    "PSL2_11",
    "PSL2_8",
    "Mathieu",
    "M11_12",
    "A7_15",
    "HS",
    "Co3",
]


class GroupFamilyCase(BaseModel):
    """二重传递群族表中的一项（内置数据 two_transitive.json）

    属性:
        family: 族标签
        kind: 仿射型或几乎单型
        description: 群的描述
        degree: 点数 v 的公式（文本）
        point_stabilizer: |G_0| 或 |G_x| 的公式（文本）
        checker: 负责该项的检查器名称
    """

    model_config = ConfigDict(frozen=True)

    family: FamilyTag
    kind: Literal["affine", "almost-simple"]
    description: str
    degree: str
    point_stabilizer: str
    checker: str
