# src/nhentropy/core/entropy/functionals.py

"""
熵泛函及其产生率 (k_B = 1，ħ = 1)。

    S_vN = −Tr(ρ̂ ln ρ̂)
    S_NH = −Tr(Ω̂ ln Ω̂)/Tr Ω̂ = S_vN − ln Tr Ω̂
    dS_vN/dt = 2Tr(Γ̂ρ̂ ln ρ̂) + 2Tr(Γ̂ρ̂)·S_vN
    dS_NH/dt = 2Tr(Γ̂ρ̂ ln Ω̂) + 2Tr(Γ̂ρ̂)·S_NH + 2Tr(Γ̂ρ̂)

熵总是由本征值计算，低于截断的本征值按 0·ln0 = 0 处理。
产生率中含 ln ρ̂ 与 ln Ω̂，在纯态边界上发散，此时不予定义。
"""
from __future__ import annotations

from typing import Optional

import numpy as np
from numpy.typing import NDArray

from nhentropy.core.algebra.matrix import ComplexMatrix, require_same_dim
from nhentropy.core.algebra.spectral import SpectralDecomposition, eigenvalues, herm_eig, require_psd
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import (
    InconsistentStateError,
    ProbabilityExtinctError,
    RateUndefinedError,
    TraceNormalizationError,
)

# 玻尔兹曼常数，所有输出以 k_B 为单位
K_B = 1.0


def _xlogx(values: NDArray[np.float64], cutoff: float) -> NDArray[np.float64]:
    safe = np.where(values > cutoff, values, 1.0)
    return np.where(values > cutoff, values * np.log(safe), 0.0)


def _check_unit_trace(rho: ComplexMatrix, trace_tol: Optional[float]) -> None:
    tol = get_settings().trace_tol if trace_tol is None else trace_tol
    trace = rho.real_trace()
    if abs(trace - 1.0) > tol:
        raise TraceNormalizationError(trace, tol)


def entropy_from_probabilities(values: NDArray[np.float64], cutoff: Optional[float] = None) -> float:
    """−Σ λ ln λ，低于 cutoff 的项记为 0。"""
    cut = get_settings().entropy_cutoff if cutoff is None else cutoff
    return float(-K_B * np.sum(_xlogx(np.asarray(values, dtype=np.float64), cut)))


def s_vn(rho: ComplexMatrix, cutoff: Optional[float] = None, trace_tol: Optional[float] = None) -> float:
    """
    von Neumann 熵 −Tr(ρ̂ ln ρ̂)。

    Raises:
        NonHermitianError: ρ 不是厄米的。
        NotPositiveSemidefiniteError: ρ 不是半正定的。
        TraceNormalizationError: Tr ρ 偏离 1。
    """
    _check_unit_trace(rho, trace_tol)
    values = eigenvalues(rho)
    require_psd(values)
    return max(entropy_from_probabilities(values, cutoff), 0.0)


def s_nh(omega: ComplexMatrix, cutoff: Optional[float] = None) -> float:
    """
    非厄米熵 −Tr(Ω̂ ln Ω̂)/Tr Ω̂，由本征值直接求和。

    截断作用在 λ/Tr Ω 上，与 s_vn(normalize(Ω)) 的截断一致。

    Raises:
        NotPositiveSemidefiniteError: Ω 不是半正定的。
        ProbabilityExtinctError: Tr Ω 不大于 trace_floor。
    """
    settings = get_settings()
    cut = settings.entropy_cutoff if cutoff is None else cutoff
    values = eigenvalues(omega)
    require_psd(values, settings.neg_tol * max(1.0, float(np.max(np.abs(values)))))
    trace = float(np.sum(values))
    if not trace > settings.trace_floor:
        raise ProbabilityExtinctError(trace)
    keep = values / trace > cut
    safe = np.where(keep, values, 1.0)
    return float(-K_B * np.sum(np.where(keep, values * np.log(safe), 0.0)) / trace)


def _rate_spectrum(rho: ComplexMatrix, rate_cutoff: Optional[float]) -> SpectralDecomposition:
    cut = get_settings().rate_cutoff if rate_cutoff is None else rate_cutoff
    decomposition = herm_eig(rho)
    smallest = decomposition.eigenvalues[0]
    if smallest < cut:
        raise RateUndefinedError(smallest, cut)
    return decomposition


def rate_vn(
    gamma: ComplexMatrix,
    rho: ComplexMatrix,
    rate_cutoff: Optional[float] = None,
    trace_tol: Optional[float] = None,
) -> float:
    """
    dS_vN/dt = 2Tr(Γ̂ρ̂ ln ρ̂) + 2Tr(Γ̂ρ̂)·S_vN。

    Raises:
        RateUndefinedError: ρ 的最小本征值低于 rate_cutoff。
        TraceNormalizationError: Tr ρ 偏离 1。
    """
    require_same_dim(gamma, rho, "熵产生率")
    _check_unit_trace(rho, trace_tol)
    decomposition = _rate_spectrum(rho, rate_cutoff)
    rho_log_rho = decomposition.apply(lambda x: x * np.log(x))
    entropy = -float(np.sum(decomposition.values * np.log(decomposition.values)))
    g = gamma.data
    decay = float(np.trace(g @ rho.data).real)
    return float(2.0 * K_B * np.trace(g @ rho_log_rho.data).real + 2.0 * decay * entropy)


def rate_nh(
    gamma: ComplexMatrix,
    rho: ComplexMatrix,
    omega: ComplexMatrix,
    rate_cutoff: Optional[float] = None,
    consistency_tol: float = 1e-8,
) -> float:
    """
    dS_NH/dt = 2Tr(Γ̂ρ̂ ln Ω̂) + 2Tr(Γ̂ρ̂)·S_NH + 2Tr(Γ̂ρ̂)。

    Raises:
        RateUndefinedError: ρ 的最小本征值低于 rate_cutoff。
        InconsistentStateError: Ω/TrΩ 与 ρ 的偏差超过 consistency_tol。
    """
    require_same_dim(gamma, rho, "熵产生率")
    require_same_dim(rho, omega, "熵产生率")
    trace = omega.real_trace()
    if not trace > get_settings().trace_floor:
        raise ProbabilityExtinctError(trace)
    deviation = float(np.max(np.abs(omega.data / trace - rho.data)))
    if deviation > consistency_tol:
        raise InconsistentStateError(deviation)
    _rate_spectrum(rho, rate_cutoff)

    omega_spectrum = herm_eig(omega)
    log_omega = omega_spectrum.apply(np.log)
    values = omega_spectrum.values
    entropy_nh = -float(np.sum(values * np.log(values)) / trace)
    g = gamma.data
    decay = float(np.trace(g @ rho.data).real)
    return float(
        2.0 * K_B * np.trace(g @ rho.data @ log_omega.data).real
        + 2.0 * decay * entropy_nh
        + 2.0 * K_B * decay
    )
