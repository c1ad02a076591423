"""
Domain Models
领域模型统一导出
"""
from app.models.field import FieldCtx, FieldElement
from app.models.cyclo import CycloCtx, CycloNum
from app.models.group import Sp2Element, GroupElement
from app.models.conjugacy import ClassRep
from app.models.convention import CharConvention
from app.models.table import CharacterId, CharacterTable

__all__ = [
    "FieldCtx", "FieldElement",
    "CycloCtx", "CycloNum",
    "Sp2Element", "GroupElement",
    "ClassRep",
    "CharConvention",
    "CharacterId", "CharacterTable",
]
