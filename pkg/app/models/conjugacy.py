"""
Conjugacy Class Models
共轭类代表元
"""
from __future__ import annotations

from dataclasses import dataclass

from app.models.enums import ClassFamily
from app.models.field import FieldElement
from app.models.group import GroupElement


@dataclass(frozen=True)
class ClassRep:
    """命名的共轭类代表元：族 + 参数 (z / k / m) + 类长与中心化子阶"""
    family: ClassFamily
    rep: GroupElement
    size: int
    centralizer_order: int
    z: FieldElement | None = None
    k: int | None = None
    m: int | None = None

    @property
    def params(self) -> dict[str, FieldElement | int]:
        params: dict[str, FieldElement | int] = {}
        if self.k is not None:
            params["k"] = self.k
        if self.m is not None:
            params["m"] = self.m
        if self.z is not None:
            params["z"] = self.z
        return params

    @property
    def z_index(self) -> int:
        return 0 if self.z is None else self.z.index

    @property
    def key(self) -> tuple[ClassFamily, int | None, int | None, int]:
        """(family, k, m, z.index)，用于表内查找"""
        return (self.family, self.k, self.m, self.z_index)

    @property
    def label(self) -> str:
        name = self.family.value
        if self.k is not None:
            name += f"_{self.k}"
        if self.m is not None:
            name += f"_{self.m}"
        if self.z is not None:
            name += f"({self.z_index})"
        return name
