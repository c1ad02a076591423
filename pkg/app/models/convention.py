"""
Character Convention
λ、√(δq) 分支等全表共用的约定
"""
from dataclasses import dataclass

from app.models.cyclo import CycloCtx, CycloNum
from app.models.field import FieldCtx

LAMBDA_DEF = "zeta_p^Tr(z)"
SQRT_BRANCH = "sqrt(delta q) = sum_t lambda(t^2)"


@dataclass(frozen=True)
class CharConvention:
    """
    λ(z) = ζ_p^Tr(z)；δ = (-1)^((q-1)/2)；sqrt_delta_q = Σ_t λ(t²)
    """
    field: FieldCtx
    cyclo: CycloCtx
    delta: int
    sqrt_delta_q: CycloNum
    lambda_def: str = LAMBDA_DEF
    sqrt_branch: str = SQRT_BRANCH

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p_step(self) -> int:
        """ζ_p = ζ_N^(N/p)"""
        return self.cyclo.N // self.field.p
