"""
Cyclotomic Number Models
分圆域 Q(zeta_N) 的精确算术

元素存为整数分子向量 + 公共正分母（gcd = 1），
在幂基 1, zeta, ..., zeta^(phi(N)-1) 下表示，乘法后用首一的 Phi_N 做长除约化。
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from app.core.exceptions import ContextMismatchError, ZeroArgumentError


@dataclass(frozen=True)
class CycloCtx:
    """Q(zeta_N) 上下文，phi_n 为 Phi_N 的整系数（低次到高次，首一）"""
    N: int
    phi_n: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.phi_n) - 1

    @cached_property
    def phi_tail(self) -> tuple[tuple[int, int], ...]:
        """Phi_N 除首项外的非零系数 (i, c)"""
        return tuple((i, c) for i, c in enumerate(self.phi_n[:-1]) if c)

    def reduce(self, vec: list[int]) -> tuple[int, ...]:
        """把任意长度的整数系数向量模 Phi_N 约化到长度 degree"""
        n = self.degree
        vec = list(vec)
        if len(vec) < n:
            return tuple(vec) + (0,) * (n - len(vec))
        tail = self.phi_tail
        for e in range(len(vec) - 1, n - 1, -1):
            c = vec[e]
            if c:
                vec[e] = 0
                base = e - n
                for i, m in tail:
                    vec[base + i] -= c * m
        return tuple(vec[:n])

    @cached_property
    def powers(self) -> tuple[tuple[int, ...], ...]:
        """zeta^e 的约化系数，e = 0..N-1"""
        n = self.degree
        current = [1] + [0] * (n - 1) if n > 1 else [1]
        table = [tuple(current)]
        for _ in range(self.N - 1):
            top = current[-1]
            shifted = [0] + current[:-1]
            if top:
                for i, m in self.phi_tail:
                    shifted[i] -= top * m
            current = shifted
            table.append(tuple(current))
        return tuple(table)

    def root(self, k: int) -> CycloNum:
        return CycloNum(self, self.powers[k % self.N], 1)

    def rational(self, value: int | Fraction) -> CycloNum:
        value = Fraction(value)
        nums = (value.numerator,) + (0,) * (self.degree - 1)
        return CycloNum(self, nums, value.denominator)

    @cached_property
    def zero(self) -> CycloNum:
        return self.rational(0)

    @cached_property
    def one(self) -> CycloNum:
        return self.rational(1)

    def __repr__(self) -> str:
        return f"Q(zeta_{self.N})"


def make_cyclo(ctx: CycloCtx, numerators, denominator: int = 1) -> CycloNum:
    """规范化构造：分母为正且与全部分子互素"""
    nums = tuple(int(n) for n in numerators)
    if denominator == 0:
        raise ZeroArgumentError("zero denominator", "分母不能为零")
    if denominator < 0:
        nums = tuple(-n for n in nums)
        denominator = -denominator
    if not any(nums):
        return CycloNum(ctx, (0,) * ctx.degree, 1)
    g = math.gcd(denominator, *nums)
    if g > 1:
        nums = tuple(n // g for n in nums)
        denominator //= g
    return CycloNum(ctx, nums, denominator)


@dataclass(frozen=True, eq=False, slots=True)
class CycloNum:
    """Q(zeta_N) 元素"""
    ctx: CycloCtx
    numerators: tuple[int, ...]
    denominator: int = 1

    # ---------- 比较 ----------

    def _same_ctx(self, other: CycloNum) -> None:
        if other.ctx is not self.ctx and other.ctx.N != self.ctx.N:
            raise ContextMismatchError(
                f"cyclotomic context mismatch: {self.ctx} vs {other.ctx}",
                "两个分圆数属于不同的分圆域",
            )

    def _coerce(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            self._same_ctx(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerators == other.numerators and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.ctx.N, self.numerators, self.denominator))

    # ---------- 加法 ----------

    def __add__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.denominator, other.denominator
        if d1 == d2:
            return make_cyclo(self.ctx, (a + b for a, b in zip(self.numerators, other.numerators)), d1)
        return make_cyclo(
            self.ctx,
            (a * d2 + b * d1 for a, b in zip(self.numerators, other.numerators)),
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.ctx, tuple(-a for a in self.numerators), self.denominator)

    def __sub__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    # ---------- 乘法 ----------

    def scalar_mul(self, r: int | Fraction) -> CycloNum:
        r = Fraction(r)
        return make_cyclo(
            self.ctx,
            (a * r.numerator for a in self.numerators),
            self.denominator * r.denominator,
        )

    def __mul__(self, other) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational:
            return self.scalar_mul(Fraction(other.numerators[0], other.denominator))
        if self.is_rational:
            return other.scalar_mul(Fraction(self.numerators[0], self.denominator))
        n = self.ctx.degree
        prod = [0] * (2 * n - 1)
        nz_other = [(j, b) for j, b in enumerate(other.numerators) if b]
        for i, a in enumerate(self.numerators):
            if a:
                for j, b in nz_other:
                    prod[i + j] += a * b
        return make_cyclo(self.ctx, self.ctx.reduce(prod), self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycloNum:
        """只支持除以非零有理数"""
        if isinstance(other, CycloNum):
            self._same_ctx(other)
            if not other.is_rational:
                raise TypeError("division is only defined by nonzero rationals")
            other = Fraction(other.numerators[0], other.denominator)
        other = Fraction(other)
        if other == 0:
            raise ZeroArgumentError("division by zero", "不能除以零")
        return self.scalar_mul(1 / other)

    # ---------- 查询 ----------

    @property
    def is_zero(self) -> bool:
        return not any(self.numerators)

    @property
    def is_rational(self) -> bool:
        return not any(self.numerators[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.numerators[0], self.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.denominator) for a in self.numerators)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.numerators):
            if not a:
                continue
            c = Fraction(a, self.denominator)
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z^{i}")
            elif c == -1:
                terms.append(f"-z^{i}")
            else:
                terms.append(f"({c})*z^{i}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CycloNum(N={self.ctx.N}, {self})"
