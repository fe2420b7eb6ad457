# src/nhentropy/core/dynamics/propagation.py

"""
精确传播子 Ω̂(t) = e^{−iℋ̂t} Ω̂(0) e^{iℋ̂†t} 以及对数域迹跟踪的长时间传播。
"""
from __future__ import annotations

import logging
import math
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import NHHamiltonian
from nhentropy.core.algebra.spectral import mat_exp
from nhentropy.core.dynamics.equations import normalize

logger = logging.getLogger(__name__)


def propagator(ham: NHHamiltonian, t: float) -> ComplexMatrix:
    """U(t) = e^{−iℋ̂t}。"""
    return mat_exp(-1j * float(t) * ham.total())


def _congruence(u: ComplexMatrix, omega: ComplexMatrix) -> ComplexMatrix:
    return ComplexMatrix(u.data @ omega.data @ u.data.conj().T).hermitize()


def propagate_exact(ham: NHHamiltonian, omega0: ComplexMatrix, t: float) -> ComplexMatrix:
    """
    用精确传播子把 Ω̂(0) 推进到时刻 t。

    合同变换保持厄米性与半正定性；结果再做一次厄米化以消除舍入漂移。

    Raises:
        MatrixOverflowError: 传播子溢出。
    """
    if t == 0:
        return omega0
    return _congruence(propagator(ham, t), omega0)


class LogState(BaseModel):
    """对数域状态: 归一化的 ρ̂ 与 ln Tr Ω̂。"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    time: float
    rho: ComplexMatrix
    log_trace: float


def propagate_log(ham: NHHamiltonian, omega0: ComplexMatrix, grid: Sequence[float]) -> List[LogState]:
    """
    在网格相邻点之间逐段做精确传播，每步归一化并累加 ln Tr Ω̂。

    Tr Ω̂ 本身可能上溢或下溢的长时间窗口里，ρ̂ 与 ln Tr Ω̂ 仍然有限，
    S_NH = S_vN(ρ̂) − ln Tr Ω̂ 因此可以直接计算。

    Args:
        ham: 非厄米哈密顿量。
        omega0: grid[0] 时刻的 Ω̂。
        grid: 严格递增的时间网格。

    Returns:
        每个网格点一个 LogState。

    Raises:
        ProbabilityExtinctError: 初始迹或某一步的迹不大于 trace_floor。
    """
    times = np.asarray(grid, dtype=np.float64)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("propagate_log 需要非空的一维时间网格")
    if np.any(np.diff(times) <= 0):
        raise ValueError("时间网格必须严格递增")

    rho = normalize(omega0, float(times[0]))
    log_trace = math.log(omega0.real_trace())
    states = [LogState(time=float(times[0]), rho=rho, log_trace=log_trace)]
    cache = {}
    for previous, current in zip(times[:-1], times[1:]):
        dt = float(current - previous)
        key = round(dt, 15)
        if key not in cache:
            cache[key] = propagator(ham, dt)
        stepped = _congruence(cache[key], rho)
        rho = normalize(stepped, float(current))
        log_trace += math.log(stepped.real_trace())
        states.append(LogState(time=float(current), rho=rho, log_trace=log_trace))
    logger.debug(f"对数域传播完成: {len(states)} 个网格点，{len(cache)} 个不同步长。")
    return states
