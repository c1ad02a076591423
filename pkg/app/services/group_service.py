"""
Heisenberg Group Service
G = H1(q) x| Sp(2,q) 的群运算

群律（三元组形式）：
    (s1, w1, z1)(s2, w2, z2) = (s1 s2, w2 + s2^-1 w1, z1 + z2 + w1*(s2 w2))
其中 w* = 1/2 (-y, x)，w* 作用在列向量上即 1/2 (x y' - y x')。
"""
from collections.abc import Iterator

from sympy import primefactors

from app.core.config import settings
from app.core.exceptions import HeisCharError
from app.core.utils.logger import get_logger
from app.models.field import FieldCtx, FieldElement
from app.models.group import GroupElement, Sp2Element, Vector

logger = get_logger(__name__)


# ============ 自定义异常 ============

class TooLargeError(HeisCharError):
    """需要枚举的群超出上限"""
    error_type = "TOO_LARGE"


class NotSymplecticError(HeisCharError):
    """矩阵行列式不为 1"""
    error_type = "NOT_SYMPLECTIC"


# ============ 向量与矩阵辅助 ============

def vec_add(v: Vector, w: Vector) -> Vector:
    return (v[0] + w[0], v[1] + w[1])


def vec_sub(v: Vector, w: Vector) -> Vector:
    return (v[0] - w[0], v[1] - w[1])


def vec_neg(v: Vector) -> Vector:
    return (-v[0], -v[1])


def vector(ctx: FieldCtx, x, y) -> Vector:
    return (_as_element(ctx, x), _as_element(ctx, y))


def _as_element(ctx: FieldCtx, value) -> FieldElement:
    if isinstance(value, FieldElement):
        return value
    return ctx.from_int(value)


def sp2(ctx: FieldCtx, a, b, c, d) -> Sp2Element:
    """
    构造 Sp(2,q) 元素

    Raises:
        NotSymplecticError: det != 1
    """
    s = Sp2Element(*(_as_element(ctx, v) for v in (a, b, c, d)))
    if s.det() != ctx.one:
        raise NotSymplecticError(f"det({s.rows()}) != 1", "矩阵行列式必须为 1")
    return s


def sp2_identity(ctx: FieldCtx) -> Sp2Element:
    one, zero = ctx.one, ctx.zero
    return Sp2Element(one, zero, zero, one)


def identity(ctx: FieldCtx) -> GroupElement:
    return GroupElement(sp2_identity(ctx), (ctx.zero, ctx.zero), ctx.zero)


def element(ctx: FieldCtx, s: Sp2Element, x=0, y=0, z=0) -> GroupElement:
    return GroupElement(s, vector(ctx, x, y), _as_element(ctx, z))


# ============ 群律 ============

def wstar(w: Vector) -> Vector:
    """w* = 1/2 (-y, x)（行向量）"""
    half = w[0].ctx.from_int(2).inverse()
    x, y = w
    return (-y * half, x * half)


def pair(row: Vector, col: Vector) -> FieldElement:
    """行向量乘列向量"""
    return row[0] * col[0] + row[1] * col[1]


def multiply(g1: GroupElement, g2: GroupElement) -> GroupElement:
    s2 = g2.s
    w = vec_add(g2.w, s2.inverse().apply(g1.w))
    z = g1.z + g2.z + pair(wstar(g1.w), s2.apply(g2.w))
    return GroupElement(g1.s * s2, w, z)


def inverse(g: GroupElement) -> GroupElement:
    """(s, w, z)^-1 = (s^-1, -s w, -z)"""
    return GroupElement(g.s.inverse(), vec_neg(g.s.apply(g.w)), -g.z)


def conjugate(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """
    g1 g2 g1^-1 的闭式

    (s1 s2 s1^-1, s1(w2 - w1 + s2^-1 w1), z2 - (w2 + s2^-1 w1 + s2 w2)* w1)
    """
    s1, s2 = g1.s, g2.s
    w1, w2 = g1.w, g2.w
    s2inv_w1 = s2.inverse().apply(w1)
    w = s1.apply(vec_add(vec_sub(w2, w1), s2inv_w1))
    z = g2.z - pair(wstar(vec_add(vec_add(w2, s2inv_w1), s2.apply(w2))), w1)
    return GroupElement(s1 * s2 * s1.inverse(), w, z)


def commutes(g1: GroupElement, g2: GroupElement) -> bool:
    return multiply(g1, g2) == multiply(g2, g1)


def in_centralizer(g1: GroupElement, g2: GroupElement) -> bool:
    """
    g1 in C_G(g2) 的三个条件：
        s1 s2 = s2 s1；w2 + s2^-1 w1 = w1 + s1^-1 w2；w1*(s2 w2) = w2*(s1 w1)
    """
    s1, s2 = g1.s, g2.s
    w1, w2 = g1.w, g2.w
    if s1 * s2 != s2 * s1:
        return False
    if vec_add(w2, s2.inverse().apply(w1)) != vec_add(w1, s1.inverse().apply(w2)):
        return False
    return pair(wstar(w1), s2.apply(w2)) == pair(wstar(w2), s1.apply(w1))


# ============ 4x4 矩阵显示 ============

def to_matrix(g: GroupElement) -> list[list[FieldElement]]:
    """
    4x4 显示

        [1 | w*      | z ]
        [0 | s       | sw]
        [0 | 0   0   | 1 ]
    """
    ctx = g.ctx
    one, zero = ctx.one, ctx.zero
    ws = wstar(g.w)
    sw = g.s.apply(g.w)
    return [
        [one, ws[0], ws[1], g.z],
        [zero, g.s.a, g.s.b, sw[0]],
        [zero, g.s.c, g.s.d, sw[1]],
        [zero, zero, zero, one],
    ]


def from_matrix(ctx: FieldCtx, m: list[list[FieldElement]]) -> GroupElement:
    """
    从 4x4 显示读回三元组

    Raises:
        ValueError: 矩阵不是 to_matrix 的形状
    """
    s = sp2(ctx, m[1][1], m[1][2], m[2][1], m[2][2])
    w = s.inverse().apply((m[1][3], m[2][3]))
    g = GroupElement(s, w, m[0][3])
    if to_matrix(g) != [list(row) for row in m]:
        raise ValueError("matrix is not of the form of a group element")
    return g


def matrix_multiply(m1: list[list[FieldElement]], m2: list[list[FieldElement]]) -> list[list[FieldElement]]:
    """GF(q) 上的朴素矩阵乘法"""
    n, k, r = len(m1), len(m2), len(m2[0])
    zero = m1[0][0].ctx.zero
    out = []
    for i in range(n):
        row = []
        for j in range(r):
            acc = zero
            for t in range(k):
                acc = acc + m1[i][t] * m2[t][j]
            row.append(acc)
        out.append(row)
    return out


# ============ Sp(2,q) 结构 ============

def element_order(s: Sp2Element) -> int:
    """Sp(2,q) 元素的阶（整除 |SL(2,q)| = q(q^2-1)）"""
    q = s.ctx.q
    n = q * (q * q - 1)
    for r in primefactors(n):
        while n % r == 0 and (s ** (n // r)).is_identity:
            n //= r
    return n


def singer_cycle(ctx: FieldCtx) -> Sp2Element:
    """
    非分裂环面生成元 b（阶 q+1）

    GF(q^2) = F[r]/(r^2 - nu)，a + b r 在基 {1, r} 下的乘法矩阵为 [[a, nu b], [b, a]]，
    取按 (a, b) index 序最小的、范数为 1 且阶恰为 q+1 的元素。
    """
    q = ctx.q
    factors = primefactors(q + 1)
    nu = ctx.nu
    for a in ctx.elements:
        for b in ctx.nonzero:
            if a * a - nu * b * b != ctx.one:
                continue
            s = Sp2Element(a, nu * b, b, a)
            if all(not (s ** ((q + 1) // r)).is_identity for r in factors):
                return s
    raise HeisCharError(f"no Singer cycle found in {ctx}")  # unreachable


def enumerate_sl2(ctx: FieldCtx) -> Iterator[Sp2Element]:
    """按 (a, b, c, d) index 字典序枚举 SL(2,q)"""
    one = ctx.one
    minus_one = -one
    for a in ctx.elements:
        for b in ctx.elements:
            for c in ctx.elements:
                if a:
                    yield Sp2Element(a, b, c, (one + b * c) / a)
                elif b * c == minus_one:
                    for d in ctx.elements:
                        yield Sp2Element(a, b, c, d)


def group_order(q: int) -> int:
    return q ** 4 * (q * q - 1)


def enumerate_group(ctx: FieldCtx, cap: int | None = None) -> Iterator[GroupElement]:
    """
    按 (s 行优先, x, y, z) 字典序枚举 G

    Raises:
        TooLargeError: |G| 超过 cap（默认 settings.ENUMERATION_CAP）
    """
    cap = settings.ENUMERATION_CAP if cap is None else cap
    order = group_order(ctx.q)
    if order > cap:
        raise TooLargeError(
            f"|G| = {order} exceeds enumeration cap {cap}",
            f"q={ctx.q} 时群阶 {order} 超过枚举上限 {cap}",
        )
    logger.debug("枚举群元 | q=%s order=%s", ctx.q, order)
    elements = ctx.elements
    for s in enumerate_sl2(ctx):
        for x in elements:
            for y in elements:
                for z in elements:
                    yield GroupElement(s, (x, y), z)


def generators(ctx: FieldCtx) -> list[GroupElement]:
    """x12(beta), x21(beta), (1,(beta,0),0), (1,(0,beta),0)，beta 取 F 的 GF(p)-基"""
    one, zero = ctx.one, ctx.zero
    ident = sp2_identity(ctx)
    gens = []
    for beta in ctx.basis:
        gens.append(GroupElement(Sp2Element(one, beta, zero, one), (zero, zero), zero))
        gens.append(GroupElement(Sp2Element(one, zero, beta, one), (zero, zero), zero))
        gens.append(GroupElement(ident, (beta, zero), zero))
        gens.append(GroupElement(ident, (zero, beta), zero))
    return gens


# ============ Sylow p-子群 K ============

def sylow_element(ctx: FieldCtx, a, x, y, z) -> GroupElement:
    """k_(a,x,y,z) = ([[1, a], [0, 1]], (x, y), z)"""
    one, zero = ctx.one, ctx.zero
    s = Sp2Element(one, _as_element(ctx, a), zero, one)
    return GroupElement(s, vector(ctx, x, y), _as_element(ctx, z))


def sylow_coordinates(g: GroupElement) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement] | None:
    """g in K 时返回 (a, x, y, z)，否则 None"""
    s = g.s
    one = g.ctx.one
    if s.a != one or s.d != one or not s.c.is_zero:
        return None
    return (s.b, g.w[0], g.w[1], g.z)
