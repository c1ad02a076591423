"""
Cyclotomic Service
分圆域服务：Phi_N、单位根、共轭、数值近似、序列化
"""
import cmath
import math
from collections.abc import Mapping
from functools import lru_cache

from sympy import divisors

from app.core.exceptions import VerificationFailedError
from app.models.cyclo import CycloCtx, CycloNum, make_cyclo
from app.schemas.table import CycloNumPayload


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    """整系数多项式除以首一多项式，要求整除"""
    num = list(num)
    dd = len(den) - 1
    quotient = [0] * (len(num) - dd)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd]
        quotient[k] = c
        if c:
            for i, m in enumerate(den):
                num[k + i] -= c * m
    if any(num):
        raise VerificationFailedError(f"inexact cyclotomic division: remainder {num}")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d"""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def cyclo_ctx(n: int) -> CycloCtx:
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    return CycloCtx(N=n, phi_n=cyclotomic_polynomial(n))


def conductor(q: int, p: int) -> int:
    """N = lcm(p, q-1, q+1)，足以容纳 lambda、rho、sigma 与 sqrt(delta q)"""
    return math.lcm(p, q - 1, q + 1)


def root(ctx: CycloCtx, k: int) -> CycloNum:
    """zeta_N^k"""
    return ctx.root(k)


def from_exponents(
    ctx: CycloCtx,
    counts: Mapping[int, int],
    denominator: int = 1,
) -> CycloNum:
    """sum_e counts[e] * zeta^e / denominator"""
    acc = [0] * ctx.degree
    powers = ctx.powers
    for e, c in counts.items():
        if c:
            for i, v in enumerate(powers[e % ctx.N]):
                if v:
                    acc[i] += c * v
    return make_cyclo(ctx, acc, denominator)


@lru_cache(maxsize=65536)
def times_root(a: CycloNum, k: int) -> CycloNum:
    """a * zeta^k"""
    ctx = a.ctx
    k %= ctx.N
    if k == 0:
        return a
    return from_exponents(
        ctx,
        {i + k: c for i, c in enumerate(a.numerators) if c},
        a.denominator,
    )


def conj(ctx: CycloCtx, a: CycloNum) -> CycloNum:
    """复共轭 zeta -> zeta^-1"""
    return from_exponents(
        ctx,
        {-i: c for i, c in enumerate(a.numerators) if c},
        a.denominator,
    )


def abs_square(ctx: CycloCtx, a: CycloNum) -> CycloNum:
    return a * conj(ctx, a)


@lru_cache(maxsize=None)
def _root_approximations(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * i / n) for i in range(n))


def to_complex(ctx: CycloCtx, a: CycloNum, digits: int | None = None) -> complex:
    """
    数值近似

    Args:
        digits: 给定时按小数位四舍五入
    """
    roots = _root_approximations(ctx.N)
    value = sum(c * roots[i] for i, c in enumerate(a.numerators) if c) / a.denominator
    value = complex(value)
    if digits is not None:
        value = complex(round(value.real, digits), round(value.imag, digits))
        # 避免 -0.0 进入输出
        value = complex(value.real + 0.0, value.imag + 0.0)
    return value


def to_payload(a: CycloNum) -> CycloNumPayload:
    return CycloNumPayload(coeffs=[[c.numerator, c.denominator] for c in a.coeffs])


def from_payload(ctx: CycloCtx, payload: CycloNumPayload) -> CycloNum:
    denominator = math.lcm(*(d for _, d in payload.coeffs))
    return make_cyclo(ctx, (n * (denominator // d) for n, d in payload.coeffs), denominator)
