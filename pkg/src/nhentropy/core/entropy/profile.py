# src/nhentropy/core/entropy/profile.py

"""
沿轨迹逐点计算熵与熵产生率。
"""
from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.dynamics.equations import normalize
from nhentropy.core.dynamics.propagation import LogState
from nhentropy.core.dynamics.state import Trajectory
from nhentropy.core.entropy.functionals import rate_nh, rate_vn, s_nh, s_vn
from nhentropy.core.exceptions import RateUndefinedError

logger = logging.getLogger(__name__)

# |S_NH − S_vN + ln Tr Ω| 的绝对容差
RELATION_TOL = 1e-10


class EntropySample(BaseModel):
    """
    单个时间点的熵数据。

    Attributes:
        time: 原始时间 t。
        tau: 无量纲时间 τ = Δ·t (没有 Δ 的模型中 τ = t)。
        log_trace: ln Tr Ω̂，长时间运行中 Tr Ω̂ 本身可能溢出。
        s_vn: von Neumann 熵。
        s_nh: 非厄米熵，可为负。
        rate_vn / rate_nh: 熵产生率；纯态边界上为 None。
        rho: 归一化密度算符。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    time: float
    tau: float
    log_trace: float
    s_vn: float
    s_nh: float
    rate_vn: Optional[float] = None
    rate_nh: Optional[float] = None
    rho: ComplexMatrix

    @model_validator(mode="after")
    def _check_relation(self) -> "EntropySample":
        deviation = abs(self.s_nh - self.s_vn + self.log_trace)
        if deviation > RELATION_TOL:
            raise ValueError(f"S_NH − S_vN + ln Tr Ω = {deviation:.3e}")
        if not 0.0 <= self.s_vn <= math.log(self.rho.dim) + 1e-9:
            raise ValueError(f"S_vN = {self.s_vn} 超出 [0, ln dim]")
        return self

    @property
    def trace_omega(self) -> float:
        return math.exp(self.log_trace)


def _rates(gamma: ComplexMatrix, rho: ComplexMatrix, omega: ComplexMatrix) -> tuple:
    try:
        return rate_vn(gamma, rho), rate_nh(gamma, rho, omega)
    except RateUndefinedError:
        return None, None


def entropy_profile(trajectory: Trajectory, gamma: ComplexMatrix, time_scale: float = 1.0) -> List[EntropySample]:
    """
    对轨迹上的每个状态计算 EntropySample。

    Args:
        trajectory: Ω̂ 轨迹。
        gamma: 衰减率算符 Γ̂ (产生率需要)。
        time_scale: τ = time_scale·t。

    Returns:
        每个网格点一个样本；纯态边界上的产生率为 None。
    """
    samples = []
    undefined = 0
    for state in trajectory.states:
        omega = state.omega
        rho = normalize(omega, state.time)
        rvn, rnh = _rates(gamma, rho, omega)
        undefined += rvn is None
        samples.append(EntropySample(
            time=state.time,
            tau=time_scale * state.time,
            log_trace=math.log(omega.real_trace()),
            s_vn=s_vn(rho),
            s_nh=s_nh(omega),
            rate_vn=rvn,
            rate_nh=rnh,
            rho=rho,
        ))
    if undefined:
        logger.warning(f"{undefined}/{len(samples)} 个时间点处于纯态边界，熵产生率未定义。")
    return samples


def entropy_profile_log(states: Sequence[LogState], gamma: ComplexMatrix, time_scale: float = 1.0) -> List[EntropySample]:
    """
    对 propagate_log 的结果计算 EntropySample。

    S_NH 由 S_vN − ln Tr Ω 得到；产生率用 ρ̂ 作为 Ω̂ 的代表计算，
    两者只差一个标量因子，ln Ω̂ 中的 ln Tr Ω 项在公式中抵消。
    """
    samples = []
    undefined = 0
    for state in states:
        entropy = s_vn(state.rho)
        rvn, rnh = _rates(gamma, state.rho, state.rho)
        undefined += rvn is None
        samples.append(EntropySample(
            time=state.time,
            tau=time_scale * state.time,
            log_trace=state.log_trace,
            s_vn=entropy,
            s_nh=entropy - state.log_trace,
            rate_vn=rvn,
            rate_nh=rnh,
            rho=state.rho,
        ))
    if undefined:
        logger.warning(f"{undefined}/{len(samples)} 个时间点处于纯态边界，熵产生率未定义。")
    return samples
