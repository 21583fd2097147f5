"""CliConfig 模块 - 命令行配置"""

from pydantic import BaseModel, Field, model_validator
from typing import Literal, Optional

from flagdesigns.models.limits import DEFAULT_SEED

Subcommand = Literal["verify-design", "witt", "orbits", "scan", "classify"]

# scan --family 可选的族名
SCAN_FAMILIES = (
    "psl2",
    "affine-gamma",
    "small",
    "psl3",
    "psu3",
    "sz",
    "ree",
    "sp2d2",
    "cited",
    "mathieu",
)


class CliConfig(BaseModel):
    """命令行配置，在任何计算开始前完成校验

    属性:
        command: 子命令
        其余字段: 对应同名命令行参数
    """

    command: Subcommand
    q: Optional[int] = None
    subgroup: Optional[str] = None
    max_q: Optional[int] = Field(None, ge=5)
    max_v: Optional[int] = Field(None, ge=5)
    max_e: Optional[int] = Field(None, ge=1)
    family: Optional[str] = None
    v: Optional[int] = None
    t: int = Field(4, ge=1)
    file: Optional[str] = None
    group: Optional[str] = None
    out: Optional[str] = None
    emit: Optional[str] = None
    oracle: bool = False
    verify: bool = False
    seed: int = DEFAULT_SEED
    jobs: int = Field(1, ge=1)
    verbose: int = 0

    @model_validator(mode="after")
    def _check_required(self) -> "CliConfig":
        if self.command == "verify-design" and self.file is None:
            raise ValueError("verify-design requires --file")
        if self.command == "orbits" and (self.q is None or self.subgroup is None):
            raise ValueError("orbits requires --q and --subgroup")
        if self.command == "scan":
            if self.family not in SCAN_FAMILIES:
                raise ValueError(f"Unknown family {self.family!r}, expected one of {', '.join(SCAN_FAMILIES)}")
        if self.command == "witt":
            if self.v is not None and self.v not in (11, 23):
                raise ValueError("witt supports --v 11 or --v 23")
            if self.v is None and not self.verify:
                raise ValueError("witt requires --v unless --verify is given")
            if self.emit is not None and self.v is None:
                raise ValueError("--emit requires --v")
        return self
