from pathlib import Path

from pydantic import BaseModel, Field, model_validator
from sympy import factorint

from app.models.enums import CommandName, OutputFormat, VerifySuite


class RunConfig(BaseModel):
    """一次 CLI 调用的完整配置；相同配置产生逐字节相同的输出"""
    model_config = {"frozen": True}

    command: CommandName
    q: int | None = Field(None, description="域的阶，自动分解为 p^f")
    p: int | None = Field(None, description="特征，与 f / modulus 一起显式给出域")
    f: int | None = Field(None, ge=1, description="扩张次数；与 q 同时给出时必须一致，单独配合 p 时缺省为 1")
    modulus: tuple[int, ...] | None = Field(None, description="首一不可约模多项式，系数低次到高次")
    format: OutputFormat = OutputFormat.TEXT
    output: Path | None = Field(None, description="输出文件，缺省写 stdout")
    suites: tuple[VerifySuite, ...] = Field(default_factory=tuple, description="verify 的套件选择")
    tolerance: float | None = Field(None, gt=0, description="数值交叉校验的容差")
    enumeration_cap: int | None = Field(None, gt=0, description="暴力校验允许的最大 |G|")
    threads: int | None = Field(None, ge=1, description="build_table 的线程数")
    seed: int | None = Field(None, description="Burnside 随机组合的起始种子")

    @model_validator(mode="after")
    def _check_field(self) -> "RunConfig":
        if (self.q is None) == (self.p is None):
            raise ValueError("exactly one of q or p must be given")
        if self.q is not None and (self.q < 3 or self.q % 2 == 0):
            raise ValueError(f"q={self.q} must be odd and > 1")
        if self.q is not None and self.f is not None:
            factors = factorint(self.q)
            if len(factors) == 1 and next(iter(factors.values())) != self.f:
                raise ValueError(f"f={self.f} does not match q={self.q}")
        if self.p is not None and self.p % 2 == 0:
            raise ValueError(f"p={self.p} must be odd")
        if self.modulus is not None and self.p is None:
            raise ValueError("modulus requires p")
        return self


class CommandOutcome(BaseModel):
    """子命令的结果：渲染好的文本与是否全部通过"""
    text: str
    passed: bool = True
