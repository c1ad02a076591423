"""
Finite Field Service
有限域服务：构造 GF(p^f)、Legendre 符号、迹
"""
import itertools
from dataclasses import replace
from functools import lru_cache

from sympy import factorint, isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from app.core.exceptions import (
    EvenCharacteristicError,
    InvalidModulusError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroArgumentError,
)
from app.core.utils.logger import get_logger
from app.models.field import FieldCtx, FieldElement
from app.schemas.field import FieldDescription

logger = get_logger(__name__)


# ============ 模多项式 ============

def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """GF(p)[x] 上的不可约判定（系数低次到高次）"""
    return gf_irreducible_p(ZZ.map([c % p for c in reversed(modulus)]), p, ZZ)


def _default_modulus(p: int, f: int) -> tuple[int, ...]:
    """按 (c_{f-1}, ..., c_0) 字典序的最小首一不可约多项式"""
    if f == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=f):
        modulus = tuple(reversed(tail)) + (1,)
        if is_irreducible(modulus, p):
            return modulus
    raise ReducibleModulusError(f"no irreducible of degree {f} over GF({p})")  # unreachable


def _is_generator(ctx: FieldCtx, g: FieldElement, prime_factors: list[int]) -> bool:
    if g.is_zero:
        return False
    one = ctx.one
    return all((g ** ((ctx.q - 1) // r)) != one for r in prime_factors)


# ============ 公开操作 ============

def factor_prime_power(q: int) -> tuple[int, int]:
    """
    把 q 分解为 p^f

    Raises:
        NotPrimeError: q 不是素数幂
        EvenCharacteristicError: p = 2
    """
    if q < 2:
        raise NotPrimeError(f"q={q} is not a prime power", f"q={q} 不是素数幂")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimeError(f"q={q} is not a prime power", f"q={q} 不是素数幂")
    (p, f), = factors.items()
    if p == 2:
        raise EvenCharacteristicError(f"q={q} has characteristic 2", "只支持奇特征")
    return int(p), int(f)


@lru_cache(maxsize=None)
def _field_new_cached(p: int, f: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    if modulus is None:
        modulus = _default_modulus(p, f)
    draft = FieldCtx(p=p, f=f, modulus=modulus, nu_coeffs=(1,) + (0,) * (f - 1))
    prime_factors = primefactors(draft.q - 1)
    for g in draft.nonzero:
        if _is_generator(draft, g, prime_factors):
            ctx = replace(draft, nu_coeffs=g.coeffs)
            logger.debug("构造有限域 | q=%s modulus=%s nu=%s", ctx.q, modulus, g.coeffs)
            return ctx
    raise ReducibleModulusError(f"no generator found for modulus {modulus}")  # unreachable


def field_new(p: int, f: int = 1, modulus: tuple[int, ...] | list[int] | None = None) -> FieldCtx:
    """
    构造 GF(p^f)

    Args:
        p: 奇素数
        f: 扩张次数（>= 1）
        modulus: 可选的首一不可约多项式，系数低次到高次，长度 f+1

    Returns:
        FieldCtx，nu 为按 index 序最小的乘法生成元

    Raises:
        NotPrimeError / EvenCharacteristicError / InvalidModulusError / ReducibleModulusError
    """
    if not isprime(p):
        raise NotPrimeError(f"p={p} is not prime", f"p={p} 不是素数")
    if p == 2:
        raise EvenCharacteristicError("p=2", "只支持奇特征")
    if f < 1:
        raise InvalidModulusError(f"degree f={f} < 1", f"扩张次数 f={f} 必须 >= 1")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise InvalidModulusError(
                f"modulus {modulus} is not monic of degree {f}",
                f"模多项式必须是 {f} 次首一多项式",
            )
        if not is_irreducible(modulus, p):
            raise ReducibleModulusError(
                f"modulus {modulus} is reducible over GF({p})",
                "模多项式可约",
            )
    return _field_new_cached(p, f, modulus)


def field_for_order(q: int) -> FieldCtx:
    """按 q 直接构造默认的 GF(q)"""
    p, f = factor_prime_power(q)
    return field_new(p, f)


def legendre(ctx: FieldCtx, u: FieldElement) -> int:
    """
    二次特征 (u/F)：平方为 1，非平方为 -1

    Raises:
        ZeroArgumentError: u = 0
    """
    if u.is_zero:
        raise ZeroArgumentError("legendre of zero", "Legendre 符号的参数不能为零")
    return 1 if u ** ((ctx.q - 1) // 2) == ctx.one else -1


def trace(ctx: FieldCtx, u: FieldElement) -> int:
    """绝对迹 Tr_{F/GF(p)}(u) = u + u^p + ... + u^(p^(f-1))，返回 [0, p) 内的整数"""
    if ctx.f == 1:
        return u.coeffs[0]
    acc = u
    frob = u
    for _ in range(ctx.f - 1):
        frob = frob ** ctx.p
        acc = acc + frob
    return acc.coeffs[0]


def describe_field(ctx: FieldCtx) -> FieldDescription:
    return FieldDescription(
        p=ctx.p,
        f=ctx.f,
        q=ctx.q,
        modulus=list(ctx.modulus),
        nu=list(ctx.nu_coeffs),
    )
