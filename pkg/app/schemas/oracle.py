from dataclasses import dataclass, field

import numpy as np

from app.models.group import GroupElement
from app.schemas.report import VerificationReport


@dataclass
class ClassPartition:
    """暴力枚举得到的共轭类划分"""
    q: int
    orbit_of: dict[tuple, int]
    orbit_sizes: list[int]
    orbit_reps: list[GroupElement]
    named_orbits: list[int] = field(default_factory=list)  # 每个命名代表元所在的轨道
    report: VerificationReport | None = None


@dataclass
class OracleResult:
    """Burnside 方法数值重算的特征标表"""
    q: int
    recovered: np.ndarray  # 行 = 特征标，列 = 命名代表元（族顺序）
    row_match: list[int]  # recovered 第 r 行对应闭式表的行号
    max_error: float
    attempts: int
    report: VerificationReport
