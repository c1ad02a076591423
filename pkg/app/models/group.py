"""
Group Element Models
Sp(2,q) 元素与 G = H1(q) x| Sp(2,q) 的三元组元素 (s, w, z)
"""
from __future__ import annotations

from dataclasses import dataclass

from app.models.field import FieldCtx, FieldElement

Vector = tuple[FieldElement, FieldElement]


@dataclass(frozen=True, slots=True)
class Sp2Element:
    """2x2 矩阵 [[a, b], [c, d]]，det = 1"""
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def __mul__(self, other: Sp2Element) -> Sp2Element:
        return Sp2Element(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, e: int) -> Sp2Element:
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        one, zero = self.ctx.one, self.ctx.zero
        result = Sp2Element(one, zero, zero, one)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> Sp2Element:
        return Sp2Element(self.d, -self.b, -self.c, self.a)

    def apply(self, w: Vector) -> Vector:
        """矩阵作用在列向量上"""
        x, y = w
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FieldElement:
        return self.a + self.d

    @property
    def is_identity(self) -> bool:
        one = self.ctx.one
        return self.a == one and self.d == one and self.b.is_zero and self.c.is_zero

    def key(self) -> tuple:
        return (self.a.coeffs, self.b.coeffs, self.c.coeffs, self.d.coeffs)

    def rows(self) -> list[list[FieldElement]]:
        return [[self.a, self.b], [self.c, self.d]]


@dataclass(frozen=True, slots=True)
class GroupElement:
    """g = (s, w, z)，s in Sp(2,q)，w in F^2，z in F"""
    s: Sp2Element
    w: Vector
    z: FieldElement

    @property
    def ctx(self) -> FieldCtx:
        return self.z.ctx

    def key(self) -> tuple:
        return self.s.key() + (self.w[0].coeffs, self.w[1].coeffs, self.z.coeffs)

    def __repr__(self) -> str:
        s = self.s
        return f"([[{s.a},{s.b}],[{s.c},{s.d}]], ({self.w[0]},{self.w[1]}), {self.z})"
