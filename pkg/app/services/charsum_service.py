"""
Character Sum Service
指数和：加法特征 λ_u、Gauss 和 Q(λ_u)、√(δq)、三次 Kloosterman 型和

所有和都是直接 O(q) 求和：先统计 Tr 指数的出现次数，再一次性组合成分圆数。
"""
from collections import Counter
from collections.abc import Iterable
from functools import lru_cache

from app.core.exceptions import VerificationFailedError, ZeroArgumentError
from app.core.utils.logger import get_logger
from app.models.convention import CharConvention
from app.models.cyclo import CycloNum
from app.models.field import FieldCtx, FieldElement
from app.services.cyclo_service import conductor, cyclo_ctx, from_exponents, to_complex, to_payload
from app.services.field_service import describe_field, legendre, trace
from app.schemas.table import LegendreEntry, SumsReport

logger = get_logger(__name__)


def _sum_lambda(ctx: FieldCtx, cyclo, values: Iterable[FieldElement]) -> CycloNum:
    """Σ λ(v)"""
    step = cyclo.N // ctx.p
    counts = Counter(trace(ctx, v) for v in values)
    return from_exponents(cyclo, {e * step: c for e, c in counts.items()})


@lru_cache(maxsize=None)
def make_convention(ctx: FieldCtx) -> CharConvention:
    """
    构造 GF(q) 上的特征约定

    Raises:
        VerificationFailedError: sqrt_delta_q² != δq（不应发生）
    """
    q = ctx.q
    cyclo = cyclo_ctx(conductor(q, ctx.p))
    delta = 1 if ((q - 1) // 2) % 2 == 0 else -1
    sqrt = _sum_lambda(ctx, cyclo, (t * t for t in ctx.elements))
    if sqrt * sqrt != delta * q:
        raise VerificationFailedError(f"sqrt_delta_q^2 != {delta * q} for q={q}")
    logger.debug("特征约定 | q=%s N=%s phi=%s delta=%s", q, cyclo.N, cyclo.degree, delta)
    return CharConvention(field=ctx, cyclo=cyclo, delta=delta, sqrt_delta_q=sqrt)


def lambda_exponent(conv: CharConvention, u: FieldElement, z: FieldElement) -> int:
    """λ_u(z) = ζ_N^e，返回 e"""
    return trace(conv.field, u * z) * conv.p_step


def lambda_u(conv: CharConvention, u: FieldElement, z: FieldElement) -> CycloNum:
    """λ_u(z) = ζ_p^Tr(uz)"""
    return conv.cyclo.root(lambda_exponent(conv, u, z))


@lru_cache(maxsize=None)
def gauss_Q(conv: CharConvention, u: FieldElement) -> CycloNum:
    """
    Q(λ_u) = Σ_t λ_u(-t²/2)

    Raises:
        ZeroArgumentError: u = 0
    """
    if u.is_zero:
        raise ZeroArgumentError("gauss sum of the trivial character", "Gauss 和的参数 u 不能为零")
    ctx = conv.field
    coefficient = -u / ctx.from_int(2)
    return _sum_lambda(ctx, conv.cyclo, (coefficient * t * t for t in ctx.elements))


def sqrt_delta_q(conv: CharConvention) -> CycloNum:
    return conv.sqrt_delta_q


@lru_cache(maxsize=None)
def cubic_sum(conv: CharConvention, d: FieldElement, c: FieldElement) -> CycloNum:
    """Σ_{t≠0} λ(-(d t³ + c)/t)"""
    return _sum_lambda(
        conv.field,
        conv.cyclo,
        (-(d * t * t * t + c) / t for t in conv.field.nonzero),
    )


def rho_pow(conv: CharConvention, e: int) -> CycloNum:
    """ρ^e，ρ = e^(2πi/(q-1))"""
    return conv.cyclo.root(e * (conv.cyclo.N // (conv.q - 1)))


def sigma_pow(conv: CharConvention, e: int) -> CycloNum:
    """σ^e，σ = e^(2πi/(q+1))"""
    return conv.cyclo.root(e * (conv.cyclo.N // (conv.q + 1)))


def legendre_table(conv: CharConvention) -> list[tuple[FieldElement, int]]:
    ctx = conv.field
    return [(u, legendre(ctx, u)) for u in ctx.nonzero]


def sums_report(conv: CharConvention) -> SumsReport:
    """sums 子命令的报告：Q(λ)、√(δq)、δ、Legendre 表"""
    ctx = conv.field
    gauss = gauss_Q(conv, ctx.one)
    g = to_complex(conv.cyclo, gauss, 12)
    s = to_complex(conv.cyclo, conv.sqrt_delta_q, 12)
    return SumsReport(
        field=describe_field(ctx),
        conductor=conv.cyclo.N,
        delta=conv.delta,
        gauss_sum=to_payload(gauss),
        gauss_sum_approx=[g.real, g.imag],
        sqrt_delta_q=to_payload(conv.sqrt_delta_q),
        sqrt_delta_q_approx=[s.real, s.imag],
        legendre=[LegendreEntry(u=list(u.coeffs), legendre=v) for u, v in legendre_table(conv)],
    )
