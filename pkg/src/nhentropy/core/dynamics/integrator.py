# src/nhentropy/core/dynamics/integrator.py

"""
定步长四阶 Runge-Kutta 积分器。

右端函数不显含时间 (ℋ̂ 与时间无关)。相邻网格点之间按
``substeps`` (每单位时间的子步数) 细分，每个子步后做厄米化。
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.config.settings import get_settings
from nhentropy.core.dynamics.state import EvolutionState, Trajectory, check_density
from nhentropy.core.exceptions import (
    InvariantViolationError,
    NonHermitianError,
    NotPositiveSemidefiniteError,
)

logger = logging.getLogger(__name__)

Rhs = Callable[[ComplexMatrix], ComplexMatrix]


def rk4_step(rhs: Rhs, y: ComplexMatrix, dt: float) -> ComplexMatrix:
    """单个 RK4 步，结果厄米化。"""
    dt2 = dt / 2.0
    k1 = rhs(y).data
    k2 = rhs(ComplexMatrix(y.data + k1 * dt2)).data
    k3 = rhs(ComplexMatrix(y.data + k2 * dt2)).data
    k4 = rhs(ComplexMatrix(y.data + k3 * dt)).data
    return ComplexMatrix(y.data + (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (dt / 6.0)).hermitize()


def substep_count(interval: float, substeps: int) -> int:
    """长度为 interval 的区间需要的子步数 (至少 1)。"""
    return max(1, math.ceil(interval * substeps - 1e-9))


def integrate(
    rhs: Rhs,
    initial: ComplexMatrix,
    grid: Sequence[float],
    substeps: Optional[int] = None,
) -> Trajectory:
    """
    在给定网格上积分 dY/dt = rhs(Y)。

    Args:
        rhs: 算符导数函数，例如 ``functools.partial(rhs_omega, ham)``。
        initial: grid[0] 时刻的初始算符。
        grid: 严格递增的时间网格。
        substeps: 每单位时间的 RK4 子步数，缺省取配置 default_substeps。

    Returns:
        Trajectory: 每个网格点一个状态，第一个状态即初始条件。

    Raises:
        InvariantViolationError: 积分过程中厄米性或半正定性被破坏 (附时间)。
        ProbabilityExtinctError: 迹下溢到 trace_floor 以下。
    """
    per_unit = get_settings().default_substeps if substeps is None else int(substeps)
    if per_unit < 1:
        raise ValueError(f"substeps 必须为正整数，得到 {per_unit}")
    times = np.asarray(grid, dtype=np.float64)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("integrate 需要非空的一维时间网格")
    if np.any(np.diff(times) <= 0):
        raise ValueError("时间网格必须严格递增")

    states = [EvolutionState(time=float(times[0]), omega=initial)]
    y = initial
    total_steps = 0
    for previous, current in zip(times[:-1], times[1:]):
        interval = float(current - previous)
        n = substep_count(interval, per_unit)
        dt = interval / n
        for _ in range(n):
            y = rk4_step(rhs, y, dt)
        total_steps += n
        try:
            check_density(y, float(current))
        except (NonHermitianError, NotPositiveSemidefiniteError) as exc:
            raise InvariantViolationError(float(current), str(exc)) from exc
        states.append(EvolutionState.model_construct(time=float(current), omega=y))
    logger.debug(f"RK4 积分完成: {len(states)} 个网格点，共 {total_steps} 个子步 (每单位时间 {per_unit})。")
    return Trajectory(states=states)
