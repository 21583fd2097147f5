"""Flag 模块 - 旗（关联的点-区组对）"""

from pydantic import BaseModel, ConfigDict


class Flag(BaseModel):
    """旗 (x, B)

    属性:
        x: 点
        b: 区组下标
    """

    model_config = ConfigDict(frozen=True)

    x: int
    b: int
