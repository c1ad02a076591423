"""
Character Table Service
特征标表：q+4 个膨胀特征标、(q-1)(q+4) 个 Weil 乘积、q 个诱导特征标 κ

表项按最终表逐项给出（z = 0 的代表元），z != 0 的列通过中心特征
χ(X(z)) = χ(A(z)) / χ(1) · χ(X(0)) 得到。
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from app.core.config import settings
from app.core.exceptions import HeisCharError, ZeroArgumentError
from app.core.utils.logger import get_logger
from app.models.conjugacy import ClassRep
from app.models.convention import CharConvention
from app.models.cyclo import CycloNum
from app.models.enums import CharacterFamily, ClassFamily
from app.models.field import FieldCtx, FieldElement
from app.models.table import WEIL_BASE, CharacterId, CharacterTable
from app.services.charsum_service import (
    cubic_sum,
    gauss_Q,
    lambda_exponent,
    make_convention,
    rho_pow,
    sigma_pow,
)
from app.services.class_service import Z_FAMILIES, class_representatives
from app.services.cyclo_service import times_root
from app.services.field_service import legendre

logger = get_logger(__name__)

F = ClassFamily
CF = CharacterFamily


# ============ 自定义异常 ============

class IndexOutOfRangeError(HeisCharError):
    """特征标参数 i / j / n 越界"""
    error_type = "INDEX_OUT_OF_RANGE"


class UnsupportedParametersError(HeisCharError):
    """(u1, u2) 不在 κ 参数集中"""
    error_type = "UNSUPPORTED_PARAMETERS"


# ============ 参数与常量 ============

def _sign(e: int) -> int:
    return 1 if e % 2 == 0 else -1


def index_range(family: CharacterFamily, q: int) -> range | None:
    """各族参数的合法范围，无参数的族返回 None"""
    base = WEIL_BASE.get(family, family)
    if base == CF.THETA or family in (CF.KAPPA_1, CF.KAPPA_NU):
        return range(1, (q - 1) // 2 + 1)
    if base == CF.CHI:
        return range(1, (q - 3) // 2 + 1)
    return None


def _check_index(family: CharacterFamily, index: int | None, q: int) -> None:
    allowed = index_range(family, q)
    if allowed is None:
        if index is not None:
            raise IndexOutOfRangeError(f"{family.value} takes no index, got {index}")
        return
    if index not in allowed:
        raise IndexOutOfRangeError(
            f"{family.value} index {index} outside [{allowed.start}, {allowed.stop - 1}]",
            f"{family.value} 的参数 {index} 越界",
        )


@dataclass(frozen=True)
class _Halves:
    """(1 ± σ√(δq))/2，σ 为 ±1"""
    plus: CycloNum
    minus: CycloNum


@lru_cache(maxsize=None)
def _halves(conv: CharConvention, sign: int) -> _Halves:
    s = conv.sqrt_delta_q.scalar_mul(sign)
    return _Halves(plus=(s + 1).scalar_mul(Fraction(1, 2)), minus=(1 - s).scalar_mul(Fraction(1, 2)))


def _degree(family: CharacterFamily, q: int) -> int:
    base = WEIL_BASE.get(family, family)
    inflated = {
        CF.TRIV: 1,
        CF.ETA1: (q - 1) // 2,
        CF.ETA2: (q - 1) // 2,
        CF.XI1: (q + 1) // 2,
        CF.XI2: (q + 1) // 2,
        CF.THETA: q - 1,
        CF.PSI: q,
        CF.CHI: q + 1,
    }
    if family in (CF.KAPPA0, CF.KAPPA_1, CF.KAPPA_NU):
        return q * q - 1
    return inflated[base] * (q if family in WEIL_BASE else 1)


def character_degree(cid: CharacterId, q: int) -> int:
    return _degree(cid.family, q)


# ============ 膨胀特征标（SL(2,q) 的特征标） ============

def inflated_value(conv: CharConvention, family: CharacterFamily, index: int | None, rep: ClassRep) -> CycloNum:
    """
    膨胀特征标在类 rep 上的值（与 z 无关）

    Raises:
        IndexOutOfRangeError: 参数越界或 family 不是膨胀族
    """
    if family not in WEIL_BASE.values():
        raise IndexOutOfRangeError(f"{family.value} is not an inflated family")
    q = conv.q
    _check_index(family, index, q)
    r = conv.cyclo.rational
    delta = conv.delta
    fam = rep.family

    if fam in (F.A, F.B):
        return r(_degree(family, q))

    if family == CF.TRIV:
        return r(1)

    if family in (CF.ETA1, CF.ETA2):
        h = _halves(conv, 1 if family == CF.ETA1 else -1)
        match fam:
            case F.C:
                return r(Fraction(-delta * (q - 1), 2))
            case F.D:
                return r(0)
            case F.E:
                return h.minus.scalar_mul(delta)
            case F.F:
                return h.plus.scalar_mul(delta)
            case F.G:
                return r(_sign(rep.m + 1))
            case F.H | F.L:
                return -h.minus
            case F.I | F.M:
                return -h.plus

    if family in (CF.XI1, CF.XI2):
        h = _halves(conv, 1 if family == CF.XI1 else -1)
        match fam:
            case F.C:
                return r(Fraction(delta * (q + 1), 2))
            case F.D:
                return r(_sign(rep.k))
            case F.E:
                return h.plus.scalar_mul(delta)
            case F.F:
                return h.minus.scalar_mul(delta)
            case F.G:
                return r(0)
            case F.H | F.L:
                return h.plus
            case F.I | F.M:
                return h.minus

    if family == CF.THETA:
        j = index
        match fam:
            case F.C:
                return r(_sign(j) * (q - 1))
            case F.D:
                return r(0)
            case F.E | F.F:
                return r(_sign(j + 1))
            case F.G:
                return -(sigma_pow(conv, j * rep.m) + sigma_pow(conv, -j * rep.m))
            case _:
                return r(-1)

    if family == CF.PSI:
        match fam:
            case F.C:
                return r(q)
            case F.D:
                return r(1)
            case F.G:
                return r(-1)
            case _:
                return r(0)

    # CF.CHI
    i = index
    match fam:
        case F.C:
            return r(_sign(i) * (q + 1))
        case F.D:
            return rho_pow(conv, i * rep.k) + rho_pow(conv, -i * rep.k)
        case F.E | F.F:
            return r(_sign(i))
        case F.G:
            return r(0)
        case _:
            return r(1)


# ============ Weil 特征标及其乘积 ============

def _central_factor(conv: CharConvention, u: FieldElement, rep: ClassRep, base: CycloNum) -> CycloNum:
    """z != 0 的中心族乘以 λ_u(z)"""
    if rep.family in Z_FAMILIES and rep.z is not None and not rep.z.is_zero:
        return times_root(base, lambda_exponent(conv, u, rep.z))
    return base


def omega_value(conv: CharConvention, u: FieldElement, rep: ClassRep) -> CycloNum:
    """
    Weil 特征标 ω_u 在类 rep 上的值

    Raises:
        ZeroArgumentError: u = 0
    """
    return weil_product_value(conv, CF.TRIV, None, u, rep)


def weil_product_value(
    conv: CharConvention,
    base_family: CharacterFamily,
    index: int | None,
    u: FieldElement,
    rep: ClassRep,
) -> CycloNum:
    """
    ω_u · X 在类 rep 上的值，X 为膨胀族 base_family（TRIV 即 ω_u 本身）

    Raises:
        ZeroArgumentError: u = 0
        IndexOutOfRangeError: 参数越界
    """
    if u.is_zero:
        raise ZeroArgumentError("Weil character with u = 0", "Weil 特征标的参数 u 不能为零")
    if base_family not in WEIL_BASE.values():
        raise IndexOutOfRangeError(f"{base_family.value} is not an inflated family")
    q = conv.q
    _check_index(base_family, index, q)
    base = _weil_base_value(conv, base_family, index, u, rep)
    return _central_factor(conv, u, rep, base)


def _weil_base_value(
    conv: CharConvention,
    base_family: CharacterFamily,
    index: int | None,
    u: FieldElement,
    rep: ClassRep,
) -> CycloNum:
    q = conv.q
    r = conv.cyclo.rational
    delta = conv.delta
    fam = rep.family

    if fam == F.A:
        return r(q * _degree(base_family, q))
    if fam in (F.B, F.L, F.M):
        return r(0)

    q_u = gauss_Q(conv, conv.field.one).scalar_mul(legendre(conv.field, u))

    if base_family == CF.TRIV:
        match fam:
            case F.C | F.E | F.F:
                return r(delta)
            case F.D:
                return r(_sign(rep.k))
            case F.G:
                return r(_sign(rep.m + 1))
            case F.H:
                return q_u
            case F.I:
                return -q_u

    if base_family in (CF.ETA1, CF.ETA2):
        h = _halves(conv, 1 if base_family == CF.ETA1 else -1)
        match fam:
            case F.C:
                return r(Fraction(-(q - 1), 2))
            case F.D:
                return r(0)
            case F.E:
                return h.minus
            case F.F:
                return h.plus
            case F.G:
                return r(1)
            case F.H:
                return -(h.minus * q_u)
            case F.I:
                return h.plus * q_u

    if base_family in (CF.XI1, CF.XI2):
        h = _halves(conv, 1 if base_family == CF.XI1 else -1)
        match fam:
            case F.C:
                return r(Fraction(q + 1, 2))
            case F.D:
                return r(1)
            case F.E:
                return h.plus
            case F.F:
                return h.minus
            case F.G:
                return r(0)
            case F.H:
                return h.plus * q_u
            case F.I:
                return -(h.minus * q_u)

    if base_family == CF.THETA:
        j = index
        match fam:
            case F.C:
                return r(_sign(j) * delta * (q - 1))
            case F.D:
                return r(0)
            case F.E | F.F:
                return r(_sign(j + 1) * delta)
            case F.G:
                return (sigma_pow(conv, j * rep.m) + sigma_pow(conv, -j * rep.m)).scalar_mul(_sign(rep.m))
            case F.H:
                return -q_u
            case F.I:
                return q_u

    if base_family == CF.PSI:
        match fam:
            case F.C:
                return r(delta * q)
            case F.D:
                return r(_sign(rep.k))
            case F.G:
                return r(_sign(rep.m))
            case _:
                return r(0)

    # CF.CHI
    i = index
    match fam:
        case F.C:
            return r(_sign(i) * delta * (q + 1))
        case F.D:
            return (rho_pow(conv, i * rep.k) + rho_pow(conv, -i * rep.k)).scalar_mul(_sign(rep.k))
        case F.E | F.F:
            return r(_sign(i) * delta)
        case F.G:
            return r(0)
        case F.H:
            return q_u
        case _:
            return -q_u


# ============ 诱导特征标 μ^G ============

def kappa_parameters(conv: CharConvention, family: CharacterFamily, index: int | None) -> tuple[FieldElement, FieldElement]:
    """κ_0 = μ_{0,1}^G，κ_{1,n} = μ_{1,ν^n}^G，κ_{ν,n} = μ_{ν,ν^n}^G"""
    ctx = conv.field
    _check_index(family, index, ctx.q)
    if family == CF.KAPPA0:
        return ctx.zero, ctx.one
    if family == CF.KAPPA_1:
        return ctx.one, ctx.nu_pow(index)
    if family == CF.KAPPA_NU:
        return ctx.nu, ctx.nu_pow(index)
    raise IndexOutOfRangeError(f"{family.value} is not an induced family")


def is_kappa_pair(conv: CharConvention, u1: FieldElement, u2: FieldElement) -> bool:
    ctx = conv.field
    if u1.is_zero:
        return u2 == ctx.one
    if u1 != ctx.one and u1 != ctx.nu:
        return False
    return any(u2 == ctx.nu_pow(n) for n in range(1, (ctx.q - 1) // 2 + 1))


def mu_induced_closed_form(
    conv: CharConvention,
    u1: FieldElement,
    u2: FieldElement,
    rep: ClassRep,
    *,
    strict: bool = False,
) -> CycloNum:
    """
    μ^G_{u1,u2} 在类 rep 上的闭式值

    Args:
        strict: 为 True 时只接受 κ 参数集 {(0,1), (1,ν^n), (ν,ν^n)}

    Raises:
        UnsupportedParametersError: strict 且 (u1, u2) 不在 κ 参数集
    """
    if strict and not is_kappa_pair(conv, u1, u2):
        raise UnsupportedParametersError(
            f"({u1}, {u2}) is not a table parameter pair",
            "(u1, u2) 不在特征标表使用的参数集中",
        )
    ctx = conv.field
    q = ctx.q
    r = conv.cyclo.rational
    match rep.family:
        case F.A:
            return r(q * q - 1)
        case F.B:
            return r(q * q - 1) if u2.is_zero else r(-1)
        case F.H:
            return r(q - 1) if u1.is_zero else gauss_Q(conv, u1 * 2) - 1
        case F.I:
            return r(q - 1) if u1.is_zero else -gauss_Q(conv, u1 * 2) - 1
        case F.L:
            return cubic_sum(conv, u1, u2 * ctx.nu_pow(rep.m))
        case F.M:
            return cubic_sum(conv, u1 * ctx.nu, u2 * ctx.nu_pow(rep.m))
        case _:
            return r(0)


# ============ 组装 ============

def character_ids(ctx: FieldCtx) -> tuple[CharacterId, ...]:
    """最终表的行顺序；ω 族以 u = ν^0..ν^(q-2) 为外层、j / i 为内层"""
    q = ctx.q
    ids: list[CharacterId] = []

    def family_ids(family: CharacterFamily, u_exponent: int | None = None) -> list[CharacterId]:
        u = None if u_exponent is None else ctx.nu_pow(u_exponent)
        allowed = index_range(family, q)
        if allowed is None:
            return [CharacterId(family, None, u, u_exponent)]
        return [CharacterId(family, n, u, u_exponent) for n in allowed]

    for family in WEIL_BASE.values():
        ids.extend(family_ids(family))
    for family in (CF.KAPPA0, CF.KAPPA_1, CF.KAPPA_NU):
        ids.extend(family_ids(family))
    for family in WEIL_BASE:
        for e in range(q - 1):
            ids.extend(family_ids(family, e))
    return tuple(ids)


def character_value(conv: CharConvention, cid: CharacterId, rep: ClassRep) -> CycloNum:
    if cid.family in WEIL_BASE:
        return weil_product_value(conv, WEIL_BASE[cid.family], cid.index, cid.u, rep)
    if cid.family in (CF.KAPPA0, CF.KAPPA_1, CF.KAPPA_NU):
        u1, u2 = kappa_parameters(conv, cid.family, cid.index)
        return mu_induced_closed_form(conv, u1, u2, rep)
    return inflated_value(conv, cid.family, cid.index, rep)


def build_table(ctx: FieldCtx) -> CharacterTable:
    """
    构造完整的特征标表

    行：膨胀 -> κ -> ω 乘积；列：族顺序。THREAD_COUNT > 1 时按行并行填充。
    """
    start = time.perf_counter()
    conv = make_convention(ctx)
    classes = class_representatives(ctx)
    chars = character_ids(ctx)
    logger.info("开始构造特征标表 | q=%s size=%d N=%s", ctx.q, len(classes), conv.cyclo.N)

    def row(cid: CharacterId) -> tuple[CycloNum, ...]:
        return tuple(character_value(conv, cid, rep) for rep in classes)

    if settings.THREAD_COUNT > 1:
        with ThreadPoolExecutor(max_workers=settings.THREAD_COUNT) as pool:
            values = tuple(pool.map(row, chars))
    else:
        values = tuple(row(cid) for cid in chars)

    table = CharacterTable(q=ctx.q, convention=conv, classes=classes, chars=chars, values=values)
    logger.info("特征标表构造完成 | q=%s elapsed=%.3fs", ctx.q, time.perf_counter() - start)
    return table


def value_at(table: CharacterTable, char: int | CharacterId, cls: int | ClassRep) -> CycloNum:
    """
    用中心特征关系取值：z != 0 的 C..I 族返回 χ(A(z))/χ(1) · χ(X(0))，其余返回表项
    """
    row = char if isinstance(char, int) else table.char_index[char]
    rep = table.classes[cls] if isinstance(cls, int) else cls
    if rep.family in Z_FAMILIES and rep.family != F.A and rep.z_index != 0:
        central = table.values[row][table.column_of(F.A, z=rep.z_index)]
        degree = table.values[row][0]
        base = table.values[row][table.column_of(rep.family, k=rep.k, m=rep.m, z=0)]
        return (central / degree) * base
    return table.entry(row, rep)
