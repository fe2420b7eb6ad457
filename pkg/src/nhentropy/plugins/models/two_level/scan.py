# src/nhentropy/plugins/models/two_level/scan.py

"""
规范乘子 k 的阈值扫描：估计 S_NH 在大 τ 处对 τ 的斜率。

k < 1 时斜率为负 (k = 0 时约为 −2μ)，k = 1 时趋于 0，k > 1 时为正 (k = 3/2 时约为 +μ)。
"""
import logging
import math
from typing import List, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from nhentropy.core.dynamics.propagation import propagate_log
from nhentropy.core.entropy.functionals import s_vn
from nhentropy.core.utils.helpers import least_squares_slope
from nhentropy.plugins.models.two_level.closed_form import snh_closed
from nhentropy.plugins.models.two_level.config import TwoLevelSettings
from nhentropy.plugins.models.two_level.hamiltonian import build_hamiltonian, initial_state
from nhentropy.plugins.models.two_level.params import TwoLevelParams

logger = logging.getLogger(__name__)

ScanMethod = Literal["closed", "numeric"]


class ScanPoint(BaseModel):
    """一个 k 值及其大 τ 斜率估计 dS_NH/dτ。"""
    model_config = ConfigDict(frozen=True)

    k: float
    slope: float


def _fit_window(tau_probe: float, settings: TwoLevelSettings) -> np.ndarray:
    start = tau_probe * (1.0 - settings.fit_fraction)
    return np.linspace(start, tau_probe, settings.fit_samples)


def _closed_slope(params: TwoLevelParams, window: np.ndarray) -> float:
    values = [snh_closed(params, float(tau)) for tau in window]
    return least_squares_slope(window, values)


def _numeric_slope(params: TwoLevelParams, tau_probe: float, settings: TwoLevelSettings) -> float:
    # 整个 [0, τ_probe] 用同一步长做对数域传播，末尾 fit_fraction 部分用于拟合
    window_steps = settings.fit_samples - 1
    total_steps = max(window_steps, math.ceil(window_steps / settings.fit_fraction))
    taus = np.linspace(0.0, tau_probe, total_steps + 1)
    ham = build_hamiltonian(params)
    states = propagate_log(ham, initial_state(params.p), taus / params.delta)
    start = tau_probe * (1.0 - settings.fit_fraction)
    window, values = [], []
    for tau, state in zip(taus, states):
        if tau >= start - 1e-12:
            window.append(float(tau))
            values.append(s_vn(state.rho) - state.log_trace)
    return least_squares_slope(window, values)


def threshold_scan(
    params_base: TwoLevelParams,
    k_values: Sequence[float],
    tau_probe: Optional[float] = None,
    method: ScanMethod = "closed",
    settings: Optional[TwoLevelSettings] = None,
) -> List[ScanPoint]:
    """
    对每个 k 估计 S_NH 的大 τ 斜率。

    Args:
        params_base: 基准参数，其中的 k 被 k_values 逐个替换。
        k_values: 要扫描的 k。
        tau_probe: 探测窗口的右端点；默认 probe_factor/μ。
        method: "closed" 用解析解，"numeric" 用对数域精确传播。
        settings: 插件配置；默认从环境变量加载。

    Returns:
        与 k_values 顺序一致的 ScanPoint 列表。

    Raises:
        ClosedFormDomainError: |γ̃| <= 1。
        ValueError: tau_probe 不是正数或 method 未知。
    """
    settings = settings or TwoLevelSettings()
    mu = params_base.mu
    probe = settings.probe_factor / mu if tau_probe is None else float(tau_probe)
    if not (math.isfinite(probe) and probe > 0.0):
        raise ValueError(f"tau_probe 必须为正，得到 {tau_probe}")
    if method not in ("closed", "numeric"):
        raise ValueError(f"未知的扫描方法: '{method}'")

    logger.info(f"阈值扫描: γ/Δ={params_base.gamma_tilde:.6g}, p={params_base.p}, τ_probe={probe:.6g}, 方法={method}")
    window = _fit_window(probe, settings)
    points = []
    for k in k_values:
        params = params_base.with_k(k)
        if method == "closed":
            slope = _closed_slope(params, window)
        else:
            slope = _numeric_slope(params, probe, settings)
        logger.debug(f"k={k:.6g}: 斜率 {slope:.6g} (参考 2(k−1)μ = {2.0 * (k - 1.0) * mu:.6g})")
        points.append(ScanPoint(k=float(k), slope=slope))
    return points
