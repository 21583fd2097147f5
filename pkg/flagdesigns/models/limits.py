"""Limits 模块 - 扫描范围配置"""

from pydantic import BaseModel, Field
from typing import Optional

DEFAULT_SEED = 20240601


class Limits(BaseModel):
    """
    Scan limits configuration.
    """

    q_max: int = Field(1000, ge=5)
    """
    Largest q scanned for PSL(2,q) on q+1 points.

    Defaults to 1000.
    """

    v_max: int = Field(10**6, ge=5)
    """
    Largest degree v scanned by the affine, PSL(3,q), PSU(3,q), Suzuki, Ree and Sp(2d,2) checkers.

    Defaults to 10**6.
    """

    e_max: Optional[int] = Field(None, ge=1)
    """
    Largest e for Sz(2^(2e+1)) and Ree(3^(2e+1)); derived from v_max when unset.
    """

    d_max: Optional[int] = Field(None, ge=3)
    """
    Largest d for Sp(2d,2) on 2^(2d-1) ± 2^(d-1) points; derived from v_max when unset.
    """

    seed: int = DEFAULT_SEED
    """
    Seed for randomized subgroup searches.
    """

    jobs: int = Field(1, ge=1)
    """
    Worker processes for the classification run. Output order does not depend on it.

    Defaults to 1.
    """
