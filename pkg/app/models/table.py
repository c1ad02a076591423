"""
Character Table Models
特征标标识与完整特征标表
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from app.models.conjugacy import ClassRep
from app.models.convention import CharConvention
from app.models.cyclo import CycloNum
from app.models.enums import CharacterFamily, ClassFamily
from app.models.field import FieldElement

# ω 乘积族 -> 被乘的膨胀族
WEIL_BASE: dict[CharacterFamily, CharacterFamily] = {
    CharacterFamily.OMEGA: CharacterFamily.TRIV,
    CharacterFamily.OMEGA_ETA1: CharacterFamily.ETA1,
    CharacterFamily.OMEGA_ETA2: CharacterFamily.ETA2,
    CharacterFamily.OMEGA_XI1: CharacterFamily.XI1,
    CharacterFamily.OMEGA_XI2: CharacterFamily.XI2,
    CharacterFamily.OMEGA_THETA: CharacterFamily.THETA,
    CharacterFamily.OMEGA_PSI: CharacterFamily.PSI,
    CharacterFamily.OMEGA_CHI: CharacterFamily.CHI,
}

INFLATED_FAMILIES = tuple(WEIL_BASE.values())
KAPPA_FAMILIES = (CharacterFamily.KAPPA0, CharacterFamily.KAPPA_1, CharacterFamily.KAPPA_NU)


@dataclass(frozen=True)
class CharacterId:
    """
    不可约特征标标识

    index 为 θ_j 的 j、χ_i 的 i 或 κ 的 n；ω 族的 u = ν^u_exponent
    """
    family: CharacterFamily
    index: int | None = None
    u: FieldElement | None = None
    u_exponent: int | None = None

    @property
    def is_weil(self) -> bool:
        return self.family in WEIL_BASE

    @property
    def base_family(self) -> CharacterFamily | None:
        return WEIL_BASE.get(self.family)

    @property
    def label(self) -> str:
        name = self.family.value
        if self.index is not None:
            name += f"_{self.index}"
        if self.u_exponent is not None:
            name += f"[u=nu^{self.u_exponent}]"
        return name


@dataclass(frozen=True)
class CharacterTable:
    """q^2+5q 阶方阵，values[行=特征标][列=共轭类]"""
    q: int
    convention: CharConvention
    classes: tuple[ClassRep, ...]
    chars: tuple[CharacterId, ...]
    values: tuple[tuple[CycloNum, ...], ...]

    @cached_property
    def class_index(self) -> dict[tuple[ClassFamily, int | None, int | None, int], int]:
        return {rep.key: i for i, rep in enumerate(self.classes)}

    @cached_property
    def char_index(self) -> dict[CharacterId, int]:
        return {c: i for i, c in enumerate(self.chars)}

    def column_of(self, family: ClassFamily, *, k: int | None = None, m: int | None = None, z: int = 0) -> int:
        return self.class_index[(family, k, m, z)]

    def entry(self, char: int | CharacterId, cls: int | ClassRep) -> CycloNum:
        row = char if isinstance(char, int) else self.char_index[char]
        col = cls if isinstance(cls, int) else self.class_index[cls.key]
        return self.values[row][col]

    def degree(self, row: int) -> int:
        return int(self.values[row][0].to_fraction())

    @property
    def degrees(self) -> list[int]:
        return [self.degree(r) for r in range(len(self.chars))]

    @property
    def size(self) -> int:
        return len(self.classes)
