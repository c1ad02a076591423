"""
Brute-force Oracle Service
小 q 下的枚举校验：共轭类轨道、诱导特征标 μ^G

轨道用生成元共轭做 BFS，元素以系数元组哈希；
诱导特征标先统计 x g x^-1 落在 K 中的 (a, y) 坐标，再对任意 (u1, u2) 组合求和。
"""
import time
from collections import Counter, deque
from functools import lru_cache

from app.core.config import settings
from app.core.utils.logger import get_logger
from app.models.conjugacy import ClassRep
from app.models.convention import CharConvention
from app.models.cyclo import CycloNum
from app.models.field import FieldCtx, FieldElement
from app.models.group import GroupElement
from app.schemas.oracle import ClassPartition
from app.schemas.report import CheckRecord, VerificationReport
from app.services.charsum_service import make_convention
from app.services.chartable_service import mu_induced_closed_form
from app.services.class_service import class_count, class_representatives
from app.services.cyclo_service import from_exponents
from app.services.field_service import trace
from app.services.group_service import (
    TooLargeError,
    conjugate,
    enumerate_group,
    generators,
    group_order,
    sylow_coordinates,
)

logger = get_logger(__name__)


def _check_cap(ctx: FieldCtx) -> None:
    order = group_order(ctx.q)
    if order > settings.BRUTEFORCE_MAX_ORDER:
        raise TooLargeError(
            f"|G| = {order} exceeds brute-force cap {settings.BRUTEFORCE_MAX_ORDER}",
            f"q={ctx.q} 时群阶 {order} 超过暴力枚举上限 {settings.BRUTEFORCE_MAX_ORDER}",
        )


def conjugacy_orbits(ctx: FieldCtx) -> tuple[dict[tuple, int], list[int], list[GroupElement]]:
    """
    全枚举 G 的共轭轨道

    Returns:
        (元素键 -> 轨道号, 轨道大小, 每条轨道的首个元素)
    """
    _check_cap(ctx)
    gens = generators(ctx)
    orbit_of: dict[tuple, int] = {}
    sizes: list[int] = []
    reps: list[GroupElement] = []
    for g in enumerate_group(ctx):
        if g.key() in orbit_of:
            continue
        label = len(sizes)
        orbit_of[g.key()] = label
        queue = deque([g])
        size = 1
        while queue:
            x = queue.popleft()
            for h in gens:
                y = conjugate(h, x)
                key = y.key()
                if key not in orbit_of:
                    orbit_of[key] = label
                    queue.append(y)
                    size += 1
        sizes.append(size)
        reps.append(g)
    return orbit_of, sizes, reps


def bruteforce_classes(ctx: FieldCtx) -> ClassPartition:
    """
    用轨道枚举复核类表：类数、命名代表元落在互不相同的轨道、轨道大小等于类长

    Raises:
        TooLargeError: |G| 超过 BRUTEFORCE_MAX_ORDER
    """
    start = time.perf_counter()
    q = ctx.q
    orbit_of, sizes, reps = conjugacy_orbits(ctx)
    named = class_representatives(ctx)
    report = VerificationReport(suite="bruteforce_classes", q=q)

    expected_count = class_count(q)
    report.record(CheckRecord(
        identifier="orbit count", passed=len(sizes) == expected_count,
        expected=str(expected_count), got=str(len(sizes)),
    ))
    named_orbits = [orbit_of[rep.rep.key()] for rep in named]
    report.record(CheckRecord(
        identifier="named representatives in distinct orbits",
        passed=len(set(named_orbits)) == len(named),
        expected=str(len(named)),
        got=str(len(set(named_orbits))),
    ))
    for rep, orbit in zip(named, named_orbits):
        if sizes[orbit] != rep.size:
            report.record(CheckRecord(
                identifier=f"size of {rep.label}", passed=False, expected=str(rep.size), got=str(sizes[orbit]),
            ))
    report.record(CheckRecord(
        identifier="orbit sizes match class sizes",
        passed=report.passed,
        expected="declared sizes",
        got="ok" if report.passed else f"{len(report.failures)} failures",
    ))
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    logger.info("轨道枚举完成 | q=%s orbits=%d elapsed=%.3fs", q, len(sizes), report.elapsed_seconds)
    return ClassPartition(
        q=q, orbit_of=orbit_of, orbit_sizes=sizes, orbit_reps=reps, named_orbits=named_orbits, report=report,
    )


@lru_cache(maxsize=None)
def _conjugators(ctx: FieldCtx) -> tuple[GroupElement, ...]:
    return tuple(enumerate_group(ctx))


@lru_cache(maxsize=None)
def sylow_profile(ctx: FieldCtx, g: GroupElement) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """x g x^-1 (x in G) 落入 K 时的 (a, y) 坐标及其次数"""
    _check_cap(ctx)
    counts: Counter = Counter()
    for x in _conjugators(ctx):
        coords = sylow_coordinates(conjugate(x, g))
        if coords is not None:
            a, _, y, _ = coords
            counts[(a.coeffs, y.coeffs)] += 1
    return tuple((a, y, c) for (a, y), c in sorted(counts.items()))


def bruteforce_induced_mu(
    ctx: FieldCtx,
    u1: FieldElement,
    u2: FieldElement,
    g: GroupElement,
    conv: CharConvention | None = None,
) -> CycloNum:
    """
    μ^G(g) = (1/|K|) Σ_{x in G} μ°(x g x^-1)，μ_{u1,u2}(k_(a,x,y,z)) = λ(u1 a + u2 y)

    Raises:
        TooLargeError: |G| 超过 BRUTEFORCE_MAX_ORDER
    """
    _check_cap(ctx)
    conv = conv or make_convention(ctx)
    exponents: Counter = Counter()
    for a, y, count in sylow_profile(ctx, g):
        value = u1 * ctx.element(a) + u2 * ctx.element(y)
        exponents[trace(ctx, value) * conv.p_step] += count
    return from_exponents(conv.cyclo, exponents, ctx.q ** 4)


def check_induced_closed_forms(
    ctx: FieldCtx,
    pairs: list[tuple[FieldElement, FieldElement]] | None = None,
) -> VerificationReport:
    """在全部命名代表元上比较暴力 μ^G 与闭式值；默认取 (0,1)、(1,ν^n)、(ν,ν^n)"""
    start = time.perf_counter()
    conv = make_convention(ctx)
    if pairs is None:
        pairs = [(ctx.zero, ctx.one)]
        for n in range(1, (ctx.q - 1) // 2 + 1):
            pairs.append((ctx.one, ctx.nu_pow(n)))
            pairs.append((ctx.nu, ctx.nu_pow(n)))
    report = VerificationReport(suite="induced_characters", q=ctx.q)
    reps: tuple[ClassRep, ...] = class_representatives(ctx)
    for u1, u2 in pairs:
        for rep in reps:
            got = bruteforce_induced_mu(ctx, u1, u2, rep.rep, conv)
            want = mu_induced_closed_form(conv, u1, u2, rep)
            if got != want:
                report.record(CheckRecord(
                    identifier=f"mu[{u1.index},{u2.index}] at {rep.label}",
                    passed=False, expected=str(want), got=str(got),
                ))
    report.record(CheckRecord(
        identifier=f"induced characters: {len(pairs)} pairs x {len(reps)} classes",
        passed=report.passed,
        expected="closed forms",
        got="ok" if report.passed else f"{len(report.failures)} failures",
    ))
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    logger.info("诱导特征标校验完成 | q=%s passed=%s elapsed=%.3fs", ctx.q, report.passed, report.elapsed_seconds)
    return report

