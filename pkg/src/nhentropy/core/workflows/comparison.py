# src/nhentropy/core/workflows/comparison.py

"""
解析解与数值解的对比工作流。
"""
import logging
import math
import time
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from nhentropy.core.entropy.profile import EntropySample
from nhentropy.core.exceptions import NumericalBoundError, WorkflowError
from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.scenario.models import Scenario
from nhentropy.core.workflows.simulation import SimulationWorkflow

logger = logging.getLogger(__name__)

# 默认偏差上限
DEFAULT_BOUND = 1e-8


class Deviation(BaseModel):
    """一项对比的最大与平均绝对偏差。"""
    model_config = ConfigDict(frozen=True)

    max_abs: float
    mean_abs: float

    @classmethod
    def of(cls, values: List[float]) -> "Deviation":
        array = np.abs(np.asarray(values, dtype=float))
        return cls(max_abs=float(array.max()), mean_abs=float(array.mean()))


class ComparisonReport(BaseModel):
    """
    对比报告。

    Attributes:
        label: 场景标识。
        skipped: 参数不在解析解定义域内时为 True。
        notice: 跳过原因。
        deviations: 受上限约束的偏差 (omega 按 max(1, max|Ω|) 缩放，其余为绝对偏差)。
        diagnostics: 仅报告、不参与判定的诊断量 (例如 F₁ 与 F₂ 的相对差)。
        bound: 偏差上限。
    """
    model_config = ConfigDict(frozen=True)

    label: str
    skipped: bool = False
    notice: Optional[str] = None
    deviations: Dict[str, Deviation] = Field(default_factory=dict)
    diagnostics: Dict[str, float] = Field(default_factory=dict)
    bound: float = DEFAULT_BOUND

    @property
    def passed(self) -> bool:
        return all(dev.max_abs <= self.bound for dev in self.deviations.values())

    def render(self) -> str:
        """生成人类可读的报告文本。"""
        lines = [f"对比报告: {self.label}"]
        if self.skipped:
            lines.append(f"  跳过: {self.notice}")
            return "\n".join(lines)
        for name, dev in self.deviations.items():
            flag = "ok" if dev.max_abs <= self.bound else "超限"
            lines.append(f"  {name:<10} max={dev.max_abs:.3e}  mean={dev.mean_abs:.3e}  [{flag}]")
        for name, value in self.diagnostics.items():
            lines.append(f"  诊断 {name}: {value:.3e}")
        lines.append(f"  上限 {self.bound:.1e}: {'通过' if self.passed else '失败'}")
        return "\n".join(lines)


def gauge_difference(base: List[EntropySample], shifted: List[EntropySample]) -> pd.DataFrame:
    """
    两次只差规范平移的运行逐点相减。

    返回列 t, tau, s_vn_diff, s_nh_diff, log_trace_diff；规范平移 α 下
    s_vn_diff 为 0，s_nh_diff = −log_trace_diff = α·t。

    Raises:
        WorkflowError: 两次运行的时间网格不一致。
    """
    if len(base) != len(shifted) or any(abs(a.time - b.time) > 1e-12 for a, b in zip(base, shifted)):
        raise WorkflowError("规范对比要求两次运行使用相同的时间网格。")
    return pd.DataFrame({
        "t": [a.time for a in base],
        "tau": [a.tau for a in base],
        "s_vn_diff": [b.s_vn - a.s_vn for a, b in zip(base, shifted)],
        "s_nh_diff": [b.s_nh - a.s_nh for a, b in zip(base, shifted)],
        "log_trace_diff": [b.log_trace - a.log_trace for a, b in zip(base, shifted)],
    })


class ComparisonWorkflow:
    """
    执行解析解与数值解对比的类。
    """
    def __init__(self, plugin_manager: PluginManager, bound: float = DEFAULT_BOUND):
        """
        Args:
            plugin_manager (PluginManager): 插件管理器。
            bound (float): 判定通过的偏差上限。
        """
        self.plugin_manager = plugin_manager
        self.bound = bound
        self.simulation = SimulationWorkflow(plugin_manager)

    def run(self, scenario: Scenario) -> ComparisonReport:
        """
        对场景做解析解对比。

        Returns:
            ComparisonReport: 对比报告；模型没有解析解或参数不在定义域内时 skipped=True。
        """
        start_time = time.time()
        label = scenario.source or scenario.model
        provider = self.plugin_manager.get_model(scenario.model)
        solution = provider.closed_form(scenario.params)
        if solution is None:
            notice = f"模型 '{scenario.model}' 的参数不在解析解定义域内 (outside closed-form domain)，跳过对比。"
            logger.warning(notice)
            return ComparisonReport(label=label, skipped=True, notice=notice, bound=self.bound)

        samples = self.simulation.simulate(scenario)
        omega_dev, trace_dev, svn_dev, snh_dev = [], [], [], []
        f_gap, literal_gap = [], []
        for sample in samples:
            t = sample.time
            expected = solution.omega(t)
            if expected is not None:
                numeric = sample.rho.data * math.exp(sample.log_trace)
                scale = max(1.0, float(np.max(np.abs(expected.data))))
                omega_dev.append(float(np.max(np.abs(numeric - expected.data))) / scale)
            trace_dev.append(sample.log_trace - math.log(solution.trace(t)))
            svn_dev.append(sample.s_vn - solution.s_vn(t))
            snh_dev.append(sample.s_nh - solution.s_nh(t))
            diagnostics = solution.diagnostics(t)
            if "F1" in diagnostics and "F2" in diagnostics:
                f1, f2 = diagnostics["F1"], diagnostics["F2"]
                f_gap.append(abs(f1 - f2) / max(1.0, abs(f1)))
            if "svn_literal" in diagnostics:
                literal_gap.append(diagnostics["svn_literal"] - sample.s_vn)

        deviations = {
            "log_trace": Deviation.of(trace_dev),
            "s_vn": Deviation.of(svn_dev),
            "s_nh": Deviation.of(snh_dev),
        }
        if omega_dev:
            deviations = {"omega": Deviation.of(omega_dev), **deviations}
        extra = {}
        if f_gap:
            extra["F1_vs_F2_max_rel"] = float(max(f_gap))
        if literal_gap:
            # NaN 表示 F₂ < 0，字面形式无定义
            finite = [abs(v) for v in literal_gap if math.isfinite(v)]
            extra["svn_literal_max_abs"] = float(max(finite)) if finite else float("nan")
            extra["svn_literal_undefined"] = float(len(literal_gap) - len(finite))

        report = ComparisonReport(label=label, deviations=deviations, diagnostics=extra, bound=self.bound)
        logger.info(f"场景 '{label}' 对比完成 ({'通过' if report.passed else '失败'})，耗时 {time.time() - start_time:.2f} 秒。")
        return report

    def check(self, scenario: Scenario) -> ComparisonReport:
        """
        同 run()，但偏差超限时抛出异常。

        Raises:
            NumericalBoundError: 任一偏差超过上限。
        """
        report = self.run(scenario)
        if not report.skipped and not report.passed:
            raise NumericalBoundError(report.render())
        return report

    def gauge_run(self, base: Scenario, shifted: Scenario) -> pd.DataFrame:
        """模拟两个场景并返回 gauge_difference()。"""
        return gauge_difference(self.simulation.simulate(base), self.simulation.simulate(shifted))
