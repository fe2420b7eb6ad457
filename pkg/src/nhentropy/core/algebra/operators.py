# src/nhentropy/core/algebra/operators.py

"""
算符构造与基本代数运算: 对易子/反对易子、Pauli 矩阵、非厄米哈密顿量的组装、
规范平移以及 2×2 矩阵的 Bloch 分解。

内部约定 ħ = 1。
"""
from __future__ import annotations

import logging
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from nhentropy.core.algebra.matrix import ComplexMatrix, require_hermitian, require_same_dim

logger = logging.getLogger(__name__)


class Axis(str, Enum):
    """Pauli 矩阵的轴。"""
    X = "x"
    Y = "y"
    Z = "z"


_PAULI = {
    Axis.X: ((0, 1), (1, 0)),
    Axis.Y: ((0, -1j), (1j, 0)),  # σ_y = iσ_xσ_z，保证 σ_xσ_y = iσ_z
    Axis.Z: ((1, 0), (0, -1)),
}


def pauli(axis: Union[Axis, str]) -> ComplexMatrix:
    """返回给定轴的 2×2 Pauli 矩阵。"""
    return ComplexMatrix(_PAULI[Axis(axis)])


def identity(dim: int = 2) -> ComplexMatrix:
    return ComplexMatrix.identity(dim)


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """[a, b] = ab − ba。"""
    require_same_dim(a, b, "对易子")
    return ComplexMatrix(a.data @ b.data - b.data @ a.data)


def anticommutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """{a, b} = ab + ba。"""
    require_same_dim(a, b, "反对易子")
    return ComplexMatrix(a.data @ b.data + b.data @ a.data)


class NHHamiltonian(BaseModel):
    """
    非厄米哈密顿量 ℋ̂ = Ĥ − iΓ̂ 的厄米分量对。

    Attributes:
        h: 厄米部分 Ĥ (ħ = 1，矩阵元为角频率)。
        gamma: 衰减率算符 Γ̂ (同样的单位)。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h: ComplexMatrix
    gamma: ComplexMatrix

    @model_validator(mode="after")
    def _check_parts(self) -> "NHHamiltonian":
        require_same_dim(self.h, self.gamma, "NHHamiltonian (Ĥ, Γ̂)")
        require_hermitian(self.h, "H")
        require_hermitian(self.gamma, "Gamma")
        return self

    @property
    def dim(self) -> int:
        return self.h.dim

    def total(self) -> ComplexMatrix:
        """ℋ̂ = Ĥ − iΓ̂。"""
        return assemble_nh(self)

    def with_gamma(self, gamma: ComplexMatrix) -> "NHHamiltonian":
        return NHHamiltonian(h=self.h, gamma=gamma)

    def gauge_shifted(self, alpha: float) -> "NHHamiltonian":
        """Γ̂ → Γ̂ + (α/2)Î 后的哈密顿量。"""
        return self.with_gamma(gauge_shift(self.gamma, alpha))

    def shifted(self, c0: complex) -> "NHHamiltonian":
        """
        ℋ̂ → ℋ̂ + c0·Î。

        实部进入 Ĥ (只贡献全局相位)，虚部进入 Γ̂: Γ̂ → Γ̂ − Im(c0)·Î，
        等价于 α = −2·Im(c0) 的规范平移。
        """
        c0 = complex(c0)
        eye = ComplexMatrix.identity(self.dim)
        return NHHamiltonian(h=self.h + c0.real * eye, gamma=self.gamma - c0.imag * eye)


def assemble_nh(ham: NHHamiltonian) -> ComplexMatrix:
    """
    组装总哈密顿量 ℋ̂ = Ĥ − iΓ̂。

    NHHamiltonian 在构造时已校验两部分的厄米性，
    不合法的输入会在构造阶段抛出 NonHermitianError。
    """
    return ComplexMatrix(ham.h.data - 1j * ham.gamma.data)


def gauge_shift(gamma: ComplexMatrix, alpha: float) -> ComplexMatrix:
    """
    规范平移 Γ̂ → Γ̂ + (ħα/2)Î (ħ = 1)。

    Args:
        gamma: 厄米的衰减率算符。
        alpha: 任意实常数。

    Returns:
        平移后的 Γ̂，仍为厄米。

    Raises:
        NonHermitianError: gamma 不是厄米的。
    """
    require_hermitian(gamma, "Gamma")
    return ComplexMatrix(gamma.data + 0.5 * float(alpha) * np.eye(gamma.dim))


def complex_shift(h_total: ComplexMatrix, c0: complex) -> ComplexMatrix:
    """ℋ̂ → ℋ̂ + c0·Î，c0 为任意复数。"""
    return ComplexMatrix(h_total.data + complex(c0) * np.eye(h_total.dim))


def expectation(chi: ComplexMatrix, rho: ComplexMatrix, atol: Optional[float] = None) -> Union[float, complex]:
    """统计平均 ⟨χ⟩ = Tr(χ ρ̂)；χ 为厄米时返回实数。"""
    require_same_dim(chi, rho, "期望值")
    value = complex(np.trace(chi.data @ rho.data))
    if chi.is_hermitian(atol) and rho.is_hermitian(atol):
        return value.real
    return value


def bloch_vector(m: ComplexMatrix) -> Tuple[complex, complex, complex, complex]:
    """
    2×2 矩阵在 {Î, σ̂_x, σ̂_y, σ̂_z} 上的分解系数 (a0, ax, ay, az)，
    即 m = a0·Î + ax·σ̂_x + ay·σ̂_y + az·σ̂_z。厄米矩阵的系数均为实数。
    """
    if m.dim != 2:
        raise ValueError(f"Bloch 分解只适用于 2×2 矩阵，得到 dim={m.dim}")
    d = m.data
    a0 = 0.5 * (d[0, 0] + d[1, 1])
    az = 0.5 * (d[0, 0] - d[1, 1])
    ax = 0.5 * (d[0, 1] + d[1, 0])
    ay = 0.5j * (d[0, 1] - d[1, 0])
    return complex(a0), complex(ax), complex(ay), complex(az)


def from_bloch(a0: complex, ax: complex, ay: complex, az: complex) -> ComplexMatrix:
    """bloch_vector 的逆运算。"""
    return ComplexMatrix(
        a0 * np.eye(2)
        + ax * pauli(Axis.X).data
        + ay * pauli(Axis.Y).data
        + az * pauli(Axis.Z).data
    )
