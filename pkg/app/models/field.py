"""
Finite Field Models
有限域 GF(q) 的上下文与元素

元素用 GF(p) 上的系数向量表示（低次到高次，长度 f），
在模多项式下做乘法约化。f = 1 时走整数快速路径。
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from app.core.exceptions import ContextMismatchError, ZeroArgumentError


@dataclass(frozen=True)
class FieldCtx:
    """GF(q) 上下文：q = p^f，modulus 为首一不可约多项式（低次到高次，长度 f+1）"""
    p: int
    f: int
    modulus: tuple[int, ...]
    nu_coeffs: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.f

    # ---------- 元素构造 ----------

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.f:
            coeffs = (coeffs + (0,) * self.f)[: self.f]
        return FieldElement(self, coeffs)

    def from_int(self, n: int) -> FieldElement:
        """把整数嵌入素域"""
        return FieldElement(self, (n % self.p,) + (0,) * (self.f - 1))

    def from_index(self, index: int) -> FieldElement:
        """index = sum c_i p^i"""
        coeffs = []
        for _ in range(self.f):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @cached_property
    def zero(self) -> FieldElement:
        return self.from_int(0)

    @cached_property
    def one(self) -> FieldElement:
        return self.from_int(1)

    @cached_property
    def nu(self) -> FieldElement:
        """乘法群生成元"""
        return FieldElement(self, self.nu_coeffs)

    @cached_property
    def elements(self) -> tuple[FieldElement, ...]:
        """按 index 升序的全部元素"""
        return tuple(self.from_index(i) for i in range(self.q))

    @cached_property
    def nonzero(self) -> tuple[FieldElement, ...]:
        return self.elements[1:]

    @cached_property
    def nu_powers(self) -> tuple[FieldElement, ...]:
        """nu^0, ..., nu^(q-2)"""
        powers = [self.one]
        for _ in range(self.q - 2):
            powers.append(powers[-1] * self.nu)
        return tuple(powers)

    def nu_pow(self, e: int) -> FieldElement:
        return self.nu_powers[e % (self.q - 1)]

    @cached_property
    def basis(self) -> tuple[FieldElement, ...]:
        """GF(p) 基 1, x, ..., x^(f-1)"""
        return tuple(
            FieldElement(self, tuple(1 if i == j else 0 for i in range(self.f)))
            for j in range(self.f)
        )

    # ---------- 系数向量上的运算 ----------

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, f = self.p, self.f
        if f == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        modulus = self.modulus
        for e in range(2 * f - 2, f - 1, -1):
            c = prod[e] % p
            if c:
                for i in range(f):
                    prod[e - f + i] -= c * modulus[i]
        return tuple(x % p for x in prod[:f])

    def power(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            a = self.inverse(a)
            e = -e
        if self.f == 1:
            return (pow(a[0], e, self.p),)
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if not any(a):
            raise ZeroArgumentError("inverse of zero", "零元没有乘法逆元")
        if self.f == 1:
            return (pow(a[0], -1, self.p),)
        return self.power(a, self.q - 2)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    """GF(q) 元素，按系数比较与哈希"""
    ctx: FieldCtx = field(repr=False, compare=False)
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> tuple[int, ...]:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatchError(
                    f"field context mismatch: {self.ctx} vs {other.ctx}",
                    "两个元素属于不同的有限域",
                )
            return other.coeffs
        if isinstance(other, int):
            return self.ctx.from_int(other).coeffs
        return NotImplemented

    def __add__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(self.coeffs, b))

    def __rsub__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(b, self.coeffs))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.neg(self.coeffs))

    def __mul__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(self.coeffs, b))

    __rmul__ = __mul__

    def __truediv__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(self.coeffs, self.ctx.inverse(b)))

    def __rtruediv__(self, other) -> FieldElement:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(b, self.ctx.inverse(self.coeffs)))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.power(self.coeffs, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inverse(self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def index(self) -> int:
        p = self.ctx.p
        value = 0
        for c in reversed(self.coeffs):
            value = value * p + c
        return value

    def __repr__(self) -> str:
        if self.ctx.f == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"
