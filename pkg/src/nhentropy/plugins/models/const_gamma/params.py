# src/nhentropy/plugins/models/const_gamma/params.py

"""
Γ̂ = (γ₀/2)·Î 的模型：衰减与哈密顿量对易，ρ̂ 做幺正演化，

    Tr Ω̂(t) = e^{−γ₀t},   S_vN(t) = S_vN⁽⁰⁾,   S_NH(t) = S_vN⁽⁰⁾ + γ₀t
"""
import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from nhentropy.core.algebra.matrix import ComplexMatrix, require_hermitian, require_same_dim
from nhentropy.core.algebra.spectral import mat_exp
from nhentropy.core.entropy.functionals import K_B, s_vn
from nhentropy.core.interfaces.base_model_provider import ClosedFormSolution


class ConstGammaParams(BaseModel):
    """
    Attributes:
        gamma0: 衰减率 γ₀，可为负 (此时 Tr Ω̂ 发散)。
        h: 任意厄米 Ĥ。
        rho0: 初始密度算符，迹为 1。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    gamma0: float
    h: ComplexMatrix
    rho0: ComplexMatrix

    @model_validator(mode="after")
    def _check(self) -> "ConstGammaParams":
        require_hermitian(self.h, "H")
        require_same_dim(self.h, self.rho0, "ConstGammaParams (H, rho0)")
        return self

    @property
    def s_vn0(self) -> float:
        """初始熵 S_vN⁽⁰⁾。"""
        return s_vn(self.rho0)


def const_gamma_solution(params: ConstGammaParams, t: float) -> Tuple[float, float, float]:
    """
    返回 (Tr Ω̂, S_vN, S_NH) = (e^{−γ₀t}, S_vN⁽⁰⁾, S_vN⁽⁰⁾ + γ₀t)。
    """
    s0 = params.s_vn0
    return math.exp(-params.gamma0 * t), s0, s0 + K_B * params.gamma0 * t


class ConstGammaSolution(ClosedFormSolution):
    """Ω̂(t) = e^{−γ₀t}·Û ρ̂₀ Û†，Û = exp(−iĤt)。"""

    def __init__(self, params: ConstGammaParams):
        self.params = params
        self._s0 = params.s_vn0

    def trace(self, t: float) -> float:
        return math.exp(-self.params.gamma0 * t)

    def s_vn(self, t: float) -> float:
        return self._s0

    def s_nh(self, t: float) -> float:
        return self._s0 + K_B * self.params.gamma0 * t

    def rho(self, t: float) -> ComplexMatrix:
        u = mat_exp(ComplexMatrix(-1j * t * self.params.h.data))
        return (u @ self.params.rho0 @ u.dagger()).hermitize()

    def omega(self, t: float) -> ComplexMatrix:
        return self.rho(t) * self.trace(t)
