"""
Burnside Oracle Service
Burnside / Dixon 方法：由类乘法结构常数数值重算整张特征标表

c[i, j, k] = #{(x, y) in C_i x C_j : x y = g_k}，M_i[j, k] = c[i, j, k]；
中心特征 ω_χ(K_j) = h_j χ(g_j) / χ(1) 是所有 M_i 的公共特征向量。
"""
import time

import numpy as np

from app.core.config import settings
from app.core.exceptions import HeisCharError
from app.core.utils.logger import get_logger
from app.models.field import FieldCtx
from app.schemas.oracle import ClassPartition, OracleResult
from app.schemas.report import CheckRecord, VerificationReport
from app.services.bruteforce_service import bruteforce_classes
from app.services.chartable_service import build_table
from app.services.cyclo_service import to_complex
from app.services.group_service import enumerate_group, group_order, inverse, multiply

logger = get_logger(__name__)


# ============ 自定义异常 ============

class DegenerateEigenspacesError(HeisCharError):
    """随机组合后仍有重特征值"""
    error_type = "DEGENERATE_EIGENSPACES"


def structure_constants(ctx: FieldCtx, partition: ClassPartition) -> np.ndarray:
    """
    类乘法结构常数，按命名代表元（族顺序）编号

    Returns:
        c[i, j, k]，形状 (K, K, K)
    """
    named = partition.named_orbits
    position = {orbit: idx for idx, orbit in enumerate(named)}
    n = len(named)
    class_of = {key: position[orbit] for key, orbit in partition.orbit_of.items()}
    elements = list(enumerate_group(ctx))
    inverses = [inverse(y) for y in elements]
    reps = [partition.orbit_reps[orbit] for orbit in named]
    c = np.zeros((n, n, n), dtype=np.int64)
    for k, g in enumerate(reps):
        for y, y_inv in zip(elements, inverses):
            x = multiply(g, y_inv)
            c[class_of[x.key()], class_of[y.key()], k] += 1
    return c


def _central_characters(
    c: np.ndarray,
    seed: int,
    max_attempts: int,
) -> tuple[np.ndarray, int]:
    """随机线性组合 M = Σ r_i M_i 的右特征向量，要求特征值两两分离"""
    n = c.shape[0]
    for attempt in range(1, max_attempts + 1):
        rng = np.random.default_rng(seed + attempt - 1)
        weights = rng.standard_normal(n)
        matrix = np.tensordot(weights, c.astype(float), axes=([0], [0]))
        eigenvalues, eigenvectors = np.linalg.eig(matrix)
        gaps = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
        np.fill_diagonal(gaps, np.inf)
        scale = max(1.0, float(np.abs(eigenvalues).max()))
        if gaps.min() > 1e-6 * scale:
            # 归一化：单位类上 ω(K_1) = 1
            vectors = eigenvectors / eigenvectors[0, :][None, :]
            return vectors.T, attempt
        logger.warning("特征值重合，换随机组合重试 | attempt=%d seed=%d", attempt, seed + attempt - 1)
    raise DegenerateEigenspacesError(
        f"eigenvalues stayed degenerate after {max_attempts} attempts",
        "类乘法矩阵的随机组合始终有重特征值",
    )


def burnside_oracle(ctx: FieldCtx, tolerance: float | None = None, *, seed: int | None = None) -> OracleResult:
    """
    数值重算特征标表并与闭式表逐行匹配（行置换，列按命名代表元对齐）

    Args:
        tolerance: 逐项误差上限，默认 ORACLE_TOLERANCE
        seed: 随机组合的起始种子，默认 ORACLE_SEED

    Raises:
        TooLargeError: |G| 超过 BRUTEFORCE_MAX_ORDER
        DegenerateEigenspacesError: 多次重试仍无法分离特征空间
    """
    tolerance = settings.ORACLE_TOLERANCE if tolerance is None else tolerance
    seed = settings.ORACLE_SEED if seed is None else seed
    start = time.perf_counter()
    q = ctx.q
    order = group_order(q)

    partition = bruteforce_classes(ctx)
    table = build_table(ctx)
    sizes = np.array([rep.size for rep in table.classes], dtype=float)

    c = structure_constants(ctx, partition)
    central, attempts = _central_characters(c, seed, settings.ORACLE_MAX_ATTEMPTS)

    # χ(1)² = |G| / Σ_k |ω(K_k)|² / h_k，χ(g_k) = χ(1) ω(K_k) / h_k
    norms = (np.abs(central) ** 2 / sizes[None, :]).sum(axis=1)
    degrees = np.sqrt(order / norms)
    recovered = degrees[:, None] * central / sizes[None, :]

    cyclo = table.convention.cyclo
    closed = np.array([[to_complex(cyclo, v) for v in row] for row in table.values], dtype=complex)
    used: set[int] = set()
    row_match: list[int] = []
    max_error = 0.0
    report = VerificationReport(suite="burnside_oracle", q=q)
    for r, row in enumerate(recovered):
        errors = np.abs(closed - row[None, :]).max(axis=1)
        for s in np.argsort(errors):
            if int(s) not in used:
                break
        s = int(s)
        used.add(s)
        row_match.append(s)
        max_error = max(max_error, float(errors[s]))
        if errors[s] > tolerance:
            report.record(CheckRecord(
                identifier=f"recovered row {r} ~ {table.chars[s].label}",
                passed=False,
                expected="match within tolerance",
                got=f"{errors[s]:.3e}",
                exact=False,
                tolerance=tolerance,
            ))

    recovered_degrees = sorted(int(round(d)) for d in recovered[:, 0].real)
    report.record(CheckRecord(
        identifier="degree multiset",
        passed=recovered_degrees == sorted(table.degrees),
        expected=str(sorted(table.degrees)),
        got=str(recovered_degrees),
    ))
    report.record(CheckRecord(
        identifier=f"{len(recovered)} recovered characters",
        passed=report.passed,
        expected=f"max entrywise error <= {tolerance:g}",
        got=f"{max_error:.3e}",
        exact=False,
        tolerance=tolerance,
    ))
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    logger.info(
        "Burnside 校验完成 | q=%s attempts=%d max_error=%.3e elapsed=%.3fs",
        q, attempts, max_error, report.elapsed_seconds,
    )
    return OracleResult(
        q=q, recovered=recovered, row_match=row_match, max_error=max_error, attempts=attempts, report=report,
    )
