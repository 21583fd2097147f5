"""Psl2Context 模块 - PSL(2,q) 的算术上下文"""

from pydantic import BaseModel, ConfigDict
from typing import Literal, Optional


class Psl2Context(BaseModel):
    """PSL(2,q) 的算术上下文

    属性:
        q: 域的阶
        p: 特征
        e: 指数，q = p^e
        n: gcd(2, q−1)
        q_mod4: q 模 4 的余数
        q_mod8: q 模 8 的余数
        three: 3 整除 (q+1)/n、(q−1)/n 还是 q
        five: 5 整除 (q+1)/n、(q−1)/n、q，或都不整除
    """

    model_config = ConfigDict(frozen=True)

    q: int
    p: int
    e: int
    n: Literal[1, 2]
    q_mod4: int
    q_mod8: int
    three: Literal["plus", "minus", "char"]
    five: Optional[Literal["plus", "minus", "char"]] = None

    @property
    def plus_half(self) -> int:
        """(q+1)/n"""
        return (self.q + 1) // self.n

    @property
    def minus_half(self) -> int:
        """(q−1)/n"""
        return (self.q - 1) // self.n
