"""
Conjugacy Class Service
共轭类代表元与类长（类表）

共 q^2 + 5q 个类，顺序：A(z)，B，C(z)，D_k(z)，E(z)，F(z)，G_m(z)，H(z)，I(z)，L_m，M_m；
带两个参数的族以 k / m 为外层、z 为内层，均升序。
"""
from functools import lru_cache

from app.core.utils.logger import get_logger
from app.models.conjugacy import ClassRep
from app.models.enums import ClassFamily
from app.models.field import FieldCtx
from app.models.group import GroupElement, Sp2Element
from app.services.group_service import group_order, singer_cycle, sp2_identity

logger = get_logger(__name__)

# 带中心参数 z 的族
Z_FAMILIES = (
    ClassFamily.A, ClassFamily.C, ClassFamily.D, ClassFamily.E,
    ClassFamily.F, ClassFamily.G, ClassFamily.H, ClassFamily.I,
)


def lemma_class_size(family: ClassFamily, q: int) -> int:
    """各族单个类的类长"""
    match family:
        case ClassFamily.A:
            return 1
        case ClassFamily.B:
            return q * (q * q - 1)
        case ClassFamily.C:
            return q * q
        case ClassFamily.D:
            return q ** 3 * (q + 1)
        case ClassFamily.E | ClassFamily.F:
            return q * q * (q * q - 1) // 2
        case ClassFamily.G:
            return q ** 3 * (q - 1)
        case ClassFamily.H | ClassFamily.I:
            return q * (q * q - 1) // 2
        case ClassFamily.L | ClassFamily.M:
            return q * q * (q * q - 1)
    raise ValueError(f"unknown class family {family}")


def family_class_count(family: ClassFamily, q: int) -> int:
    """各族的类数"""
    match family:
        case ClassFamily.B:
            return 1
        case ClassFamily.D:
            return q * (q - 3) // 2
        case ClassFamily.G:
            return q * (q - 1) // 2
        case ClassFamily.L | ClassFamily.M:
            return (q - 1) // 2
    return q


def class_count(q: int) -> int:
    return q * q + 5 * q


@lru_cache(maxsize=None)
def class_representatives(ctx: FieldCtx) -> tuple[ClassRep, ...]:
    """
    按族顺序给出全部 q^2 + 5q 个共轭类代表元

    Returns:
        ClassRep 元组，size 之和为 |G|
    """
    q = ctx.q
    order = group_order(q)
    one, zero, nu = ctx.one, ctx.zero, ctx.nu
    minus_one = -one
    origin = (zero, zero)

    def make(family: ClassFamily, s: Sp2Element, w=origin, z=None, k=None, m=None) -> ClassRep:
        size = lemma_class_size(family, q)
        rep = GroupElement(s, w, zero if z is None else z)
        return ClassRep(family=family, rep=rep, size=size, centralizer_order=order // size, z=z, k=k, m=m)

    h_matrix = Sp2Element(one, zero, one, one)
    i_matrix = Sp2Element(one, zero, nu, one)
    b = singer_cycle(ctx)
    reps: list[ClassRep] = []

    reps.extend(make(ClassFamily.A, sp2_identity(ctx), z=z) for z in ctx.elements)
    reps.append(make(ClassFamily.B, sp2_identity(ctx), w=(one, zero)))
    reps.extend(make(ClassFamily.C, Sp2Element(minus_one, zero, zero, minus_one), z=z) for z in ctx.elements)
    for k in range(1, (q - 3) // 2 + 1):
        s = Sp2Element(ctx.nu_pow(k), zero, zero, ctx.nu_pow(-k))
        reps.extend(make(ClassFamily.D, s, z=z, k=k) for z in ctx.elements)
    reps.extend(make(ClassFamily.E, Sp2Element(minus_one, zero, minus_one, minus_one), z=z) for z in ctx.elements)
    reps.extend(make(ClassFamily.F, Sp2Element(minus_one, zero, -nu, minus_one), z=z) for z in ctx.elements)
    for m in range(1, (q - 1) // 2 + 1):
        s = b ** m
        reps.extend(make(ClassFamily.G, s, z=z, m=m) for z in ctx.elements)
    reps.extend(make(ClassFamily.H, h_matrix, z=z) for z in ctx.elements)
    reps.extend(make(ClassFamily.I, i_matrix, z=z) for z in ctx.elements)
    for m in range(1, (q - 1) // 2 + 1):
        reps.append(make(ClassFamily.L, h_matrix, w=(ctx.nu_pow(m), zero), m=m))
    for m in range(1, (q - 1) // 2 + 1):
        reps.append(make(ClassFamily.M, i_matrix, w=(ctx.nu_pow(m), zero), m=m))

    logger.debug("共轭类代表元 | q=%s count=%d", q, len(reps))
    return tuple(reps)


def centralizer_order(rep: ClassRep) -> int:
    """|C_G(g)| = |G| / |class|"""
    return group_order(rep.rep.ctx.q) // rep.size
