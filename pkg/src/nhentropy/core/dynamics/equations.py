# src/nhentropy/core/dynamics/equations.py

"""
Ω̂ 与 ρ̂ 的运动方程、迹的变化率以及归一化 (ħ = 1)。

    dΩ/dt = −i[Ĥ, Ω̂] − {Γ̂, Ω̂}
    d Tr Ω/dt = −2 Tr(Γ̂ Ω̂)
    ρ̂ = Ω̂ / Tr Ω̂
    dρ/dt = −i[Ĥ, ρ̂] − {Γ̂, ρ̂} + 2ρ̂ Tr(Γ̂ ρ̂)
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from nhentropy.core.algebra.matrix import ComplexMatrix, require_same_dim
from nhentropy.core.algebra.operators import NHHamiltonian
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import ProbabilityExtinctError, TraceNormalizationError


def _liouvillian(ham: NHHamiltonian, state: ComplexMatrix) -> np.ndarray:
    require_same_dim(ham.h, state, "运动方程")
    h, g, s = ham.h.data, ham.gamma.data, state.data
    return -1j * (h @ s - s @ h) - (g @ s + s @ g)


def rhs_omega(ham: NHHamiltonian, omega: ComplexMatrix) -> ComplexMatrix:
    """
    非归一化密度算符的线性运动方程右端 −i[Ĥ,Ω̂] − {Γ̂,Ω̂}。

    Raises:
        DimensionMismatchError: 维数不一致。
    """
    return ComplexMatrix(_liouvillian(ham, omega)).hermitize()


def rhs_rho(ham: NHHamiltonian, rho: ComplexMatrix, trace_tol: Optional[float] = None) -> ComplexMatrix:
    """
    归一化密度算符的非线性运动方程右端。

    结果的迹解析上为 0。

    Raises:
        TraceNormalizationError: 输入的迹偏离 1 超过 trace_tol。
        DimensionMismatchError: 维数不一致。
    """
    tol = get_settings().trace_tol if trace_tol is None else trace_tol
    trace = rho.real_trace()
    if abs(trace - 1.0) > tol:
        raise TraceNormalizationError(trace, tol)
    decay = float(np.trace(ham.gamma.data @ rho.data).real)
    return ComplexMatrix(_liouvillian(ham, rho) + 2.0 * decay * rho.data).hermitize()


def trace_rate(gamma: ComplexMatrix, omega: ComplexMatrix) -> float:
    """d Tr Ω/dt = −2 Tr(Γ̂ Ω̂)。"""
    require_same_dim(gamma, omega, "迹变化率")
    return float(-2.0 * np.trace(gamma.data @ omega.data).real)


def normalize(omega: ComplexMatrix, time: Optional[float] = None, trace_floor: Optional[float] = None) -> ComplexMatrix:
    """
    ρ̂ = Ω̂ / Tr Ω̂。

    Args:
        omega: 非归一化密度算符。
        time: 当前时刻，仅用于错误报告。
        trace_floor: 迹的下限，缺省取配置 trace_floor。

    Raises:
        ProbabilityExtinctError: Tr Ω 不大于 trace_floor。
    """
    floor = get_settings().trace_floor if trace_floor is None else trace_floor
    trace = omega.real_trace()
    if not trace > floor:
        raise ProbabilityExtinctError(trace, time)
    return ComplexMatrix(omega.data / trace)
