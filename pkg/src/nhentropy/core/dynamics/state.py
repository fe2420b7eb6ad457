# src/nhentropy/core/dynamics/state.py

"""
演化状态与轨迹的数据模型。
"""
from __future__ import annotations

from typing import List, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, model_validator

from nhentropy.core.algebra.matrix import ComplexMatrix, require_hermitian
from nhentropy.core.algebra.spectral import eigenvalues
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import NotPositiveSemidefiniteError, ProbabilityExtinctError


def check_density(omega: ComplexMatrix, time: Optional[float] = None, neg_tol: Optional[float] = None) -> None:
    """
    校验 (非归一化) 密度算符: 厄米、半正定、迹为正。

    半正定容差按谱范数缩放: -neg_tol·max(1, ‖Ω‖₂)。

    Raises:
        NonHermitianError: 不是厄米的。
        NotPositiveSemidefiniteError: 最小本征值低于容差。
        ProbabilityExtinctError: 迹不大于 trace_floor。
    """
    settings = get_settings()
    require_hermitian(omega, "Omega")
    values = eigenvalues(omega)
    tol = (settings.neg_tol if neg_tol is None else neg_tol) * max(1.0, float(np.max(np.abs(values))))
    if values[0] < -tol:
        raise NotPositiveSemidefiniteError(float(values[0]), tol)
    trace = omega.real_trace()
    if not trace > settings.trace_floor:
        raise ProbabilityExtinctError(trace, time)


class EvolutionState(BaseModel):
    """
    某一时刻的非归一化密度算符 Ω̂ (或归一化的 ρ̂)。

    构造时校验厄米性、半正定性以及 Tr Ω > 0。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    time: float
    omega: ComplexMatrix

    @model_validator(mode="after")
    def _check(self) -> "EvolutionState":
        check_density(self.omega, self.time)
        return self

    @property
    def trace(self) -> float:
        return self.omega.real_trace()


class Trajectory(BaseModel):
    """按时间排序的状态序列；grid 严格递增且与各状态时间逐点一致。"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    states: List[EvolutionState]

    @model_validator(mode="after")
    def _check_grid(self) -> "Trajectory":
        if not self.states:
            raise ValueError("轨迹至少包含一个状态")
        times = self.grid
        if np.any(np.diff(times) <= 0):
            raise ValueError("轨迹时间网格必须严格递增")
        return self

    @property
    def grid(self) -> NDArray[np.float64]:
        return np.array([state.time for state in self.states], dtype=np.float64)

    @property
    def traces(self) -> NDArray[np.float64]:
        return np.array([state.trace for state in self.states], dtype=np.float64)

    @property
    def initial(self) -> EvolutionState:
        return self.states[0]

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, index: int) -> EvolutionState:
        return self.states[index]
