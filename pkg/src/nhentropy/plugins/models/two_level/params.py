# src/nhentropy/plugins/models/two_level/params.py

"""
两能级失谐模型的参数。

    Ĥ = −Δσ̂_x,   Γ̂ = γσ̂_z + k·μΔ·Î   (ħ = 1)

γ̃ = γ/Δ，p̄ = 2p − 1，μ = sqrt(γ̃² − 1)。解析解只在 |γ̃| > 1 时成立；
k ≠ 0 的规范平移量 kμΔ 同样需要实的 μ。
"""
import math

from pydantic import BaseModel, ConfigDict, Field

from nhentropy.core.exceptions import ClosedFormDomainError


class TwoLevelParams(BaseModel):
    """
    Attributes:
        delta: 隧穿频率 Δ (> 0)。
        gamma: 失谐衰减率 γ。
        p: 初始激发态权重，初态为 diag(p, 1 − p)。
        k: 规范乘子；k=0 为基本模型，k=1 为临界值。
    """
    model_config = ConfigDict(frozen=True)

    delta: float = Field(gt=0)
    gamma: float
    p: float = Field(ge=0, le=1)
    k: float = 0.0

    @property
    def gamma_tilde(self) -> float:
        return self.gamma / self.delta

    @property
    def p_bar(self) -> float:
        return 2.0 * self.p - 1.0

    @property
    def in_closed_form_domain(self) -> bool:
        return abs(self.gamma_tilde) > 1.0

    @property
    def mu(self) -> float:
        """
        μ = sqrt(γ̃² − 1) > 0。

        Raises:
            ClosedFormDomainError: |γ̃| <= 1。
        """
        if not self.in_closed_form_domain:
            raise ClosedFormDomainError(self.gamma_tilde)
        return math.sqrt(self.gamma_tilde ** 2 - 1.0)

    @property
    def is_pure(self) -> bool:
        return self.p in (0.0, 1.0)

    def with_k(self, k: float) -> "TwoLevelParams":
        return self.model_copy(update={"k": float(k)})
