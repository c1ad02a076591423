from pydantic import BaseModel, ConfigDict, Field

from app.schemas.field import FieldDescription


class CycloNumPayload(BaseModel):
    """分圆数：Q(zeta_N) 在幂基 1, zeta, ..., zeta^(phi-1) 下的有理系数"""
    coeffs: list[list[int]] = Field(..., description="[[分子, 分母], ...]，长度 phi(N)")


class GroupElementPayload(BaseModel):
    """群元三元组 (s, w, z)，域元素均为系数向量"""
    s: list[list[list[int]]] = Field(..., description="2x2 辛矩阵")
    w: list[list[int]] = Field(..., description="向量 (x, y)")
    z: list[int] = Field(..., description="中心坐标")


class ClassPayload(BaseModel):
    """共轭类"""
    family: str
    label: str
    params: dict[str, int | list[int]] = Field(default_factory=dict, description="z 为系数向量，k / m 为整数")
    size: int
    centralizer_order: int
    rep: GroupElementPayload


class CharacterPayload(BaseModel):
    """不可约特征标"""
    family: str
    label: str
    index: int | None = Field(None, description="i / j / n 参数")
    u: list[int] | None = Field(None, description="Weil 表示参数 u 的系数向量")
    u_exponent: int | None = Field(None, description="u = nu^e 中的 e")
    degree: int


class TableMeta(BaseModel):
    """特征标表的约定"""
    model_config = ConfigDict(populate_by_name=True)

    q: int
    p: int
    f: int
    modulus: list[int]
    nu: list[int]
    conductor: int = Field(..., description="N = lcm(p, q-1, q+1)")
    delta: int = Field(..., description="(-1)^((q-1)/2)")
    lambda_def: str = Field("zeta_p^Tr(z)", alias="lambda")
    sqrt_branch: str = Field("sqrt(delta q) = sum_t lambda(t^2)")


class TableDocument(BaseModel):
    """gen --format json 的输出"""
    meta: TableMeta
    classes: list[ClassPayload]
    characters: list[CharacterPayload]
    values: list[list[CycloNumPayload]]
    approx: list[list[list[float]]] = Field(..., description="[[[re, im], ...], ...]")


class LegendreEntry(BaseModel):
    u: list[int]
    legendre: int


class SumsReport(BaseModel):
    """sums 子命令的输出"""
    field: FieldDescription
    conductor: int
    delta: int
    gauss_sum: CycloNumPayload = Field(..., description="Q(lambda_1)")
    gauss_sum_approx: list[float]
    sqrt_delta_q: CycloNumPayload
    sqrt_delta_q_approx: list[float]
    legendre: list[LegendreEntry]
