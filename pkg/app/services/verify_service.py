"""
Verification Service
校验套件：精确的行 / 列正交关系、ω 限制、Weil 乘积、κ 区分性、次数、Gauss 和

精确正交关系在整数张量上计算：把表项乘以公共分母 D 变成整系数向量。
Gram 矩阵的判定走多模核：取若干 m ≡ 1 (mod N) 的素数，Φ_N 模 m 完全分裂，
Z[ζ_N]/(m) 同构于 φ 个 F_m 的乘积，乘法与共轭都按求值点逐点进行，全程 int64 批量矩阵乘。
需要具体数值时（分解重数、失败项）用幂基卷积核：共轭用 φ×φ 整数矩阵，
卷积逐个移位做 tensordot，最后用 (2φ-1)×φ 矩阵模 Φ_N 约化。
"""
import math
import time
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import isprime, primitive_root

from app.core.config import settings
from app.core.utils.logger import get_logger
from app.models.cyclo import CycloCtx, CycloNum, make_cyclo
from app.models.enums import CharacterFamily, ClassFamily, VerifySuite
from app.models.field import FieldCtx
from app.models.convention import CharConvention
from app.models.table import WEIL_BASE, CharacterId, CharacterTable, KAPPA_FAMILIES
from app.schemas.report import CheckRecord, VerificationReport
from app.services import bruteforce_service, burnside_service
from app.services.charsum_service import gauss_Q, lambda_u, make_convention
from app.services.chartable_service import build_table
from app.services.class_service import class_count
from app.services.cyclo_service import abs_square, to_complex
from app.services.field_service import legendre
from app.services.group_service import group_order

logger = get_logger(__name__)

_INT64_SAFE = 2 ** 62
# 多模核的素数不超过 2^25：m² · max(K, φ) 留在 int64 内
_SPLIT_PRIME_BITS = 25
# 报告中最多逐条记录的失败项
_MAX_RECORDED_FAILURES = 50


# ============ 整数张量 ============

def _cyclo_tensor(rows: Sequence[Sequence[CycloNum]]) -> tuple[np.ndarray, int]:
    """CycloNum 矩阵 -> (整数张量 [行, 列, 系数], 公共分母)"""
    scale = math.lcm(*(v.denominator for row in rows for v in row))
    data = [[[n * (scale // v.denominator) for n in v.numerators] for v in row] for row in rows]
    return np.array(data, dtype=object), scale


def _conjugation_matrix(cyclo: CycloCtx) -> np.ndarray:
    """第 i 行为 ζ^-i 的约化系数，conj(v) = v @ C"""
    powers = cyclo.powers
    return np.array([powers[(-i) % cyclo.N] for i in range(cyclo.degree)], dtype=object)


def _reduction_matrix(cyclo: CycloCtx) -> np.ndarray:
    """第 e 行为 ζ^e 的约化系数，e < 2φ-1"""
    powers = cyclo.powers
    return np.array([powers[e % cyclo.N] for e in range(2 * cyclo.degree - 1)], dtype=object)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.abs(arr).max())


def _hermitian_products(
    left: np.ndarray,
    right: np.ndarray,
    weights: Sequence[int],
    cyclo: CycloCtx,
) -> np.ndarray:
    """
    P[a, b] = Σ_k w_k · left[a, k] · conj(right[b, k])，结果为约化后的整数系数向量

    Args:
        left: [A, K, φ] 整数张量
        right: [B, K, φ] 整数张量
        weights: 长度 K 的整数权重
    """
    phi = cyclo.degree
    conj_m = _conjugation_matrix(cyclo)
    red = _reduction_matrix(cyclo)
    w = np.array(list(weights), dtype=object)

    right_bound = _max_abs(right) * _max_abs(conj_m) * phi
    bound = (
        _max_abs(left) * right_bound * max(1, sum(abs(int(x)) for x in w))
        * phi * (2 * phi - 1) * max(1, _max_abs(red))
    )
    if max(bound, right_bound) < _INT64_SAFE:
        left, right, conj_m, red, w = (a.astype(np.int64) for a in (left, right, conj_m, red, w))
        dtype = np.int64
    else:
        dtype = object
        logger.debug("正交核退回 Python 整数 | bound=%s", bound)

    right_conj = np.tensordot(right, conj_m, axes=([2], [0]))
    out = np.zeros((left.shape[0], right.shape[0], 2 * phi - 1), dtype=dtype)
    for i in range(phi):
        weighted = left[:, :, i] * w[None, :]
        out[:, :, i:i + phi] += np.tensordot(weighted, right_conj, axes=([1], [1]))
    return np.tensordot(out, red, axes=([2], [0]))


def _coefficient_bound(left: np.ndarray, right: np.ndarray, weights: Sequence[int], cyclo: CycloCtx) -> int:
    """_hermitian_products 输出系数绝对值的上界"""
    phi = cyclo.degree
    return (
        _max_abs(left) * _max_abs(right) * max(1, _max_abs(_conjugation_matrix(cyclo))) * phi
        * max(1, sum(abs(int(x)) for x in weights))
        * phi * (2 * phi - 1) * max(1, _max_abs(_reduction_matrix(cyclo)))
    )


# ============ 多模核 ============

def _split_primes(N: int, limit: int) -> list[int]:
    """自 2^25 向下取 m ≡ 1 (mod N) 的素数，直到乘积超过 limit"""
    primes: list[int] = []
    product = 1
    m = ((1 << _SPLIT_PRIME_BITS) - 1) // N * N + 1
    while product <= limit:
        if m <= N:
            raise ValueError(f"not enough primes = 1 mod {N} below 2^{_SPLIT_PRIME_BITS}")
        if isprime(m):
            primes.append(m)
            product *= m
        m -= N
    return primes


@lru_cache(maxsize=64)
def _evaluation_points(N: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """
    F_m 中 φ(N) 个本原 N 次单位根上的求值

    Returns:
        (E, partner)：E[i, j] = r_j^i mod m；r_{partner[j]} = r_j^{-1}
    """
    zeta = pow(primitive_root(m), (m - 1) // N, m)
    exponents = [k for k in range(1, N) if math.gcd(k, N) == 1]
    position = {k: j for j, k in enumerate(exponents)}
    points = [pow(zeta, k, m) for k in exponents]
    evaluation = np.array([[pow(r, i, m) for r in points] for i in range(len(exponents))], dtype=np.int64)
    partner = np.array([position[N - k] for k in exponents], dtype=np.intp)
    return evaluation, partner


def _residues(tensor: np.ndarray, m: int) -> np.ndarray:
    if tensor.dtype != object:
        return np.mod(tensor, m)
    return np.mod(tensor, m).astype(np.int64)


def _gram_mismatches(
    left: np.ndarray,
    right: np.ndarray,
    weights: Sequence[int],
    cyclo: CycloCtx,
    expected: np.ndarray,
) -> np.ndarray:
    """
    精确判定 Σ_k w_k · left[a, k] · conj(right[b, k]) 是否等于有理整数 expected[a, b]

    各素数 m 上把系数向量在本原单位根处求值，共轭即换到倒数根，
    每个求值点上 Gram 是一次 [A, K] × [K, B] 矩阵乘。差值的幂基系数有界，
    素数乘积超过两倍上界时全部剩余为零等价于差值为零。

    Returns:
        [A, B] 布尔矩阵，True 为不相等
    """
    phi = cyclo.degree
    limit = 2 * (_coefficient_bound(left, right, weights, cyclo) + _max_abs(expected)) + 1
    primes = _split_primes(cyclo.N, limit)
    logger.debug("多模正交核 | N=%s phi=%s primes=%d", cyclo.N, phi, len(primes))

    same = right is left
    if _max_abs(left) < _INT64_SAFE and _max_abs(right) < _INT64_SAFE:
        left, right = left.astype(np.int64), right.astype(np.int64)
    mismatch = np.zeros((left.shape[0], right.shape[0]), dtype=bool)
    for m in primes:
        evaluation, partner = _evaluation_points(cyclo.N, m)
        w = _residues(np.array(list(weights), dtype=object), m)
        # [A, K, φ] -> 求值点优先
        lhs = np.tensordot(_residues(left, m), evaluation, axes=([2], [0])) % m
        rhs = lhs if same else np.tensordot(_residues(right, m), evaluation, axes=([2], [0])) % m
        lhs = lhs.transpose(2, 0, 1) * w[None, None, :] % m
        rhs = rhs.transpose(2, 1, 0)
        gram = np.matmul(lhs, rhs[partner]) % m
        mismatch |= np.any(gram != _residues(expected, m)[None, :, :], axis=0)
    return mismatch


def _as_cyclo(cyclo: CycloCtx, vec: np.ndarray, denominator: int) -> CycloNum:
    return make_cyclo(cyclo, (int(x) for x in vec), denominator)


def _complex_matrix(table: CharacterTable) -> np.ndarray:
    cyclo = table.convention.cyclo
    return np.array([[to_complex(cyclo, v) for v in row] for row in table.values], dtype=complex)


def _timed(suite: str, q: int, body: Callable[[VerificationReport], None]) -> VerificationReport:
    report = VerificationReport(suite=suite, q=q)
    start = time.perf_counter()
    body(report)
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    logger.info(
        "校验完成 | suite=%s q=%s passed=%s checks=%d elapsed=%.3fs",
        suite, q, report.passed, len(report.checks), report.elapsed_seconds,
    )
    return report


def _record_gram(
    report: VerificationReport,
    name: str,
    labels: Sequence[str],
    tensor: np.ndarray,
    weights: Sequence[int],
    expected_diag: Sequence[int],
    denominator: int,
    cyclo: CycloCtx,
) -> None:
    """tensor 自身的加权 Gram 与 diag(expected) 比较，逐条记录失败项并追加汇总"""
    n = tensor.shape[0]
    expected = np.zeros((n, n), dtype=object)
    for i, value in enumerate(expected_diag):
        expected[i, i] = value * denominator
    bad = np.argwhere(_gram_mismatches(tensor, tensor, weights, cyclo, expected))
    failures = [(int(a), int(b)) for a, b in bad if a <= b]
    for a, b in failures[:_MAX_RECORDED_FAILURES]:
        entry = _hermitian_products(tensor[a:a + 1], tensor[b:b + 1], weights, cyclo)[0, 0]
        got = _as_cyclo(cyclo, entry, denominator)
        want = Fraction(expected_diag[a]) if a == b else Fraction(0)
        report.record(CheckRecord(
            identifier=f"{name}[{labels[a]}, {labels[b]}]",
            passed=False,
            expected=str(want),
            got=str(got),
        ))
    report.record(CheckRecord(
        identifier=f"{name}: {n} diagonal, {n * (n - 1) // 2} off-diagonal",
        passed=not failures,
        expected="0 failures",
        got=f"{len(failures)} failures",
    ))


# ============ 正交关系 ============

def check_row_orthogonality(table: CharacterTable, tolerance: float | None = None) -> VerificationReport:
    """<χ, ψ> = (1/|G|) Σ size · χ(g) conj(ψ(g)) = δ_χψ，精确；另做数值交叉校验"""
    tolerance = settings.NUMERIC_TOLERANCE if tolerance is None else tolerance
    order = group_order(table.q)

    def body(report: VerificationReport) -> None:
        tensor, scale = _cyclo_tensor(table.values)
        sizes = [rep.size for rep in table.classes]
        labels = [c.label for c in table.chars]
        _record_gram(
            report, "row", labels, tensor, sizes,
            [1] * table.size, order * scale * scale, table.convention.cyclo,
        )

        values = _complex_matrix(table)
        numeric = (values * np.array(sizes, dtype=float)) @ values.conj().T / order
        error = float(np.abs(numeric - np.eye(table.size)).max())
        report.record(CheckRecord(
            identifier="row numeric cross-check",
            passed=error <= tolerance,
            expected="identity",
            got=f"max deviation {error:.3e}",
            exact=False,
            tolerance=tolerance,
        ))

    return _timed("row_orthogonality", table.q, body)


def check_column_orthogonality(table: CharacterTable, tolerance: float | None = None) -> VerificationReport:
    """Σ_χ χ(g) conj(χ(h)) = |C_G(g)| δ_gh，精确；另做数值交叉校验"""
    tolerance = settings.NUMERIC_TOLERANCE if tolerance is None else tolerance

    def body(report: VerificationReport) -> None:
        tensor, scale = _cyclo_tensor(table.values)
        columns = np.ascontiguousarray(tensor.transpose(1, 0, 2))
        labels = [rep.label for rep in table.classes]
        centralizers = [rep.centralizer_order for rep in table.classes]
        _record_gram(
            report, "column", labels, columns, [1] * table.size,
            centralizers, scale * scale, table.convention.cyclo,
        )

        values = _complex_matrix(table)
        root = np.sqrt(np.array(centralizers, dtype=float))
        numeric = (values.T @ values.conj()) / np.outer(root, root)
        error = float(np.abs(numeric - np.eye(table.size)).max())
        report.record(CheckRecord(
            identifier="column numeric cross-check",
            passed=error <= tolerance,
            expected="identity after scaling by |C_G(g)|",
            got=f"max deviation {error:.3e}",
            exact=False,
            tolerance=tolerance,
        ))

    return _timed("column_orthogonality", table.q, body)


def decompose_class_function(table: CharacterTable, values: Sequence[CycloNum]) -> list[CycloNum]:
    """
    类函数 f 在各不可约特征标上的重数 <f, χ>

    Args:
        values: f 在 table.classes 上的取值

    Returns:
        与 table.chars 对齐的重数（特征标的重数为非负整数）
    """
    if len(values) != table.size:
        raise ValueError(f"expected {table.size} class values, got {len(values)}")
    cyclo = table.convention.cyclo
    f_tensor, f_scale = _cyclo_tensor([list(values)])
    t_tensor, t_scale = _cyclo_tensor(table.values)
    sizes = [rep.size for rep in table.classes]
    gram = _hermitian_products(f_tensor, t_tensor, sizes, cyclo)
    denominator = group_order(table.q) * f_scale * t_scale
    return [_as_cyclo(cyclo, gram[0, r], denominator) for r in range(table.size)]


# ============ Weil 特征标 ============

def _rows_by(table: CharacterTable, family: CharacterFamily) -> list[int]:
    return [r for r, c in enumerate(table.chars) if c.family == family]


def check_omega_restriction(table: CharacterTable) -> VerificationReport:
    """ω_u 限制到 H1(q)：ω_u(A(z)) = q λ_u(z)，ω_u(B) = 0，且不同 u 的行不同"""
    conv = table.convention
    ctx = conv.field
    q = table.q

    def body(report: VerificationReport) -> None:
        rows = _rows_by(table, CharacterFamily.OMEGA)
        b_col = table.column_of(ClassFamily.B)
        for r in rows:
            cid = table.chars[r]
            for z in ctx.elements:
                got = table.values[r][table.column_of(ClassFamily.A, z=z.index)]
                want = lambda_u(conv, cid.u, z).scalar_mul(q)
                if got != want:
                    report.record(CheckRecord(
                        identifier=f"{cid.label} at A({z.index})", passed=False, expected=str(want), got=str(got),
                    ))
            got = table.values[r][b_col]
            if not got.is_zero:
                report.record(CheckRecord(identifier=f"{cid.label} at B", passed=False, expected="0", got=str(got)))
        a_cols = [table.column_of(ClassFamily.A, z=z.index) for z in ctx.elements]
        signatures = {tuple(table.values[r][c] for c in a_cols) for r in rows}
        report.record(CheckRecord(
            identifier=f"{len(rows)} omega rows distinct on the center",
            passed=len(signatures) == len(rows),
            expected=str(len(rows)),
            got=str(len(signatures)),
        ))
        report.record(CheckRecord(
            identifier=f"omega restriction over {len(rows)} rows",
            passed=report.passed,
            expected="q*lambda_u on A(z), 0 on B",
            got="ok" if report.passed else f"{len(report.failures)} failures",
        ))

    return _timed("omega_restriction", q, body)


def check_weil_products(table: CharacterTable) -> VerificationReport:
    """ω_u X 的行逐点等于 ω_u 行乘以膨胀行 X"""
    products: dict[tuple[CycloNum, CycloNum], CycloNum] = {}

    def product(a: CycloNum, b: CycloNum) -> CycloNum:
        key = (a, b)
        if key not in products:
            products[key] = a * b
        return products[key]

    def body(report: VerificationReport) -> None:
        index = table.char_index
        checked = 0
        for r, cid in enumerate(table.chars):
            if cid.family not in WEIL_BASE or cid.family == CharacterFamily.OMEGA:
                continue
            omega_row = table.values[index[CharacterId(CharacterFamily.OMEGA, None, cid.u, cid.u_exponent)]]
            base_row = table.values[index[CharacterId(WEIL_BASE[cid.family], cid.index)]]
            for col, rep in enumerate(table.classes):
                want = product(omega_row[col], base_row[col])
                got = table.values[r][col]
                if got != want:
                    report.record(CheckRecord(
                        identifier=f"{cid.label} at {rep.label}", passed=False, expected=str(want), got=str(got),
                    ))
            checked += 1
        report.record(CheckRecord(
            identifier=f"weil products over {checked} rows",
            passed=report.passed,
            expected="pointwise products",
            got="ok" if report.passed else f"{len(report.failures)} failures",
        ))

    return _timed("weil_products", table.q, body)


# ============ κ / 次数 / Gauss 和 ============

def check_distinctness(table: CharacterTable) -> VerificationReport:
    """κ_0(H(0)) + κ_0(I(0)) = 2q-2，κ_{d,n}(H(0)) + κ_{d,n}(I(0)) = -2"""
    q = table.q

    def body(report: VerificationReport) -> None:
        h_col = table.column_of(ClassFamily.H)
        i_col = table.column_of(ClassFamily.I)
        for r, cid in enumerate(table.chars):
            if cid.family not in KAPPA_FAMILIES:
                continue
            got = table.values[r][h_col] + table.values[r][i_col]
            want = 2 * q - 2 if cid.family == CharacterFamily.KAPPA0 else -2
            report.record(CheckRecord(
                identifier=f"{cid.label}(H(0)) + {cid.label}(I(0))",
                passed=got == want,
                expected=str(want),
                got=str(got),
            ))

    return _timed("kappa_distinctness", q, body)


def check_degrees(table: CharacterTable, tolerance: float | None = None) -> VerificationReport:
    """方阵形状、各族行数、Σ χ(1)² = |G|、中心列为 次数×单位根、|χ(g)| <= χ(1)"""
    tolerance = settings.NUMERIC_TOLERANCE if tolerance is None else tolerance
    q = table.q
    order = group_order(q)

    def body(report: VerificationReport) -> None:
        n = class_count(q)
        report.record(CheckRecord(
            identifier="square table",
            passed=len(table.chars) == table.size == n == len(table.values),
            expected=f"{n} x {n}",
            got=f"{len(table.chars)} x {table.size}",
        ))
        inflated = sum(1 for c in table.chars if c.family in WEIL_BASE.values())
        weil = sum(1 for c in table.chars if c.family in WEIL_BASE)
        kappa = sum(1 for c in table.chars if c.family in KAPPA_FAMILIES)
        report.record(CheckRecord(
            identifier="rows by family (inflated, weil, kappa)",
            passed=(inflated, weil, kappa) == (q + 4, (q - 1) * (q + 4), q),
            expected=str((q + 4, (q - 1) * (q + 4), q)),
            got=str((inflated, weil, kappa)),
        ))
        first = [row[0] for row in table.values]
        integral = all(v.is_rational and v.to_fraction().denominator == 1 and v.to_fraction() > 0 for v in first)
        report.record(CheckRecord(
            identifier="degrees are positive integers",
            passed=integral,
            expected="positive integers",
            got=", ".join(str(v) for v in first) if not integral else "ok",
        ))
        total = sum((v.to_fraction() ** 2 for v in first if v.is_rational), Fraction(0))
        report.record(CheckRecord(
            identifier="sum of squared degrees",
            passed=total == order,
            expected=str(order),
            got=str(total),
        ))
        cyclo = table.convention.cyclo
        a_cols = [c for c, rep in enumerate(table.classes) if rep.family == ClassFamily.A]
        for r, row in enumerate(table.values):
            degree_sq = row[0] * row[0]
            for c in a_cols:
                if abs_square(cyclo, row[c]) != degree_sq:
                    report.record(CheckRecord(
                        identifier=f"{table.chars[r].label} at {table.classes[c].label}",
                        passed=False,
                        expected=f"|value| = {row[0]}",
                        got=str(row[c]),
                    ))
        values = _complex_matrix(table)
        excess = float((np.abs(values) - np.abs(values[:, :1])).max())
        report.record(CheckRecord(
            identifier="|chi(g)| <= chi(1)",
            passed=excess <= tolerance,
            expected="<= 0",
            got=f"{excess:.3e}",
            exact=False,
            tolerance=tolerance,
