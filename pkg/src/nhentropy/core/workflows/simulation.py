# src/nhentropy/core/workflows/simulation.py

"""
模拟工作流。
协调 模型插件 -> 积分/传播 -> 熵剖面 -> CSV 的过程。
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict

from nhentropy.core.dynamics.equations import rhs_omega
from nhentropy.core.dynamics.integrator import integrate
from nhentropy.core.dynamics.propagation import propagate_log
from nhentropy.core.entropy.profile import EntropySample, entropy_profile, entropy_profile_log
from nhentropy.core.exceptions import NHEntropyError, WorkflowError
from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.scenario.models import Scenario
from nhentropy.core.utils.helpers import CSV_FLOAT_FORMAT, time_grid
from nhentropy.core.workflows.plotting import render_run_script

logger = logging.getLogger(__name__)

# CSV 列顺序；产生率无定义时写空字符串
CSV_COLUMNS = [
    "t", "tau", "trace_omega", "s_vn", "s_nh", "rate_vn", "rate_nh",
    "rho_re_00", "rho_re_01", "rho_im_01", "rho_re_11",
]


class SimulationResult(BaseModel):
    """一次模拟的结果。"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    scenario: Scenario
    samples: List[EntropySample]
    csv_path: Optional[Path] = None
    plot_path: Optional[Path] = None
    elapsed: float = 0.0


def samples_to_frame(samples: Sequence[EntropySample]) -> pd.DataFrame:
    """
    把熵样本转换为按 CSV_COLUMNS 排列的 DataFrame。
    ρ̂ 只输出左上 2×2 块。
    """
    rows = []
    for sample in samples:
        rho = sample.rho.data
        rows.append({
            "t": sample.time,
            "tau": sample.tau,
            "trace_omega": sample.trace_omega,
            "s_vn": sample.s_vn,
            "s_nh": sample.s_nh,
            "rate_vn": sample.rate_vn,
            "rate_nh": sample.rate_nh,
            "rho_re_00": rho[0, 0].real,
            "rho_re_01": rho[0, 1].real,
            "rho_im_01": rho[0, 1].imag,
            "rho_re_11": rho[1, 1].real,
        })
    return pd.DataFrame(rows, columns=CSV_COLUMNS, dtype=float)


def write_frame(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """按固定格式写 CSV: 科学计数法 17 位有效数字，'.' 小数点，Unix 换行，缺失值为空。"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, na_rep="", lineterminator="\n")
    return path


class SimulationWorkflow:
    """
    执行单个场景模拟的类。
    """
    def __init__(self, plugin_manager: PluginManager):
        """
        初始化模拟工作流。

        Args:
            plugin_manager (PluginManager): 用于获取模型插件实例的插件管理器。
        """
        self.plugin_manager = plugin_manager
        logger.debug("SimulationWorkflow 初始化完成。")

    def simulate(self, scenario: Scenario) -> List[EntropySample]:
        """
        积分场景的轨迹并计算熵剖面，不写文件。

        Raises:
            PluginNotFoundError: 场景中的模型未注册。
            NumericalError: 积分或熵计算失败。
        """
        provider = self.plugin_manager.get_model(scenario.model)
        ham = provider.build_hamiltonian(scenario.params)
        omega0 = provider.initial_state(scenario.params)
        scale = provider.time_scale(scenario.params)
        grid = time_grid(scenario.t_max, scenario.samples)

        if scenario.integrator == "exact":
            states = propagate_log(ham, omega0, grid)
            return entropy_profile_log(states, ham.gamma, scale)
        trajectory = integrate(partial(rhs_omega, ham), omega0, grid, scenario.substeps)
        return entropy_profile(trajectory, ham.gamma, scale)

    def run(self, scenario: Scenario, out_dir: Union[str, Path, None] = None) -> SimulationResult:
        """
        执行完整的模拟流程；场景配置了 csv 输出时写文件。

        Args:
            scenario (Scenario): 已校验的场景。
            out_dir (Union[str, Path, None]): 输出目录，缺省取配置 output_dir。

        Returns:
            SimulationResult: 熵样本与 CSV 路径。

        Raises:
            NHEntropyError: 模型或数值错误。
            OSError: 写文件失败。
            WorkflowError: 其他意外错误。
        """
        start_time = time.time()
        label = scenario.source or scenario.model
        logger.info(f"开始模拟场景 '{label}' (模型 {scenario.model}, 积分器 {scenario.integrator})")
        try:
            samples = self.simulate(scenario)
            csv_path = plot_path = None
            if scenario.outputs.csv:
                base = Path(out_dir if out_dir is not None else self.plugin_manager.settings.output_dir)
                csv_path = write_frame(samples_to_frame(samples), base / scenario.outputs.csv)
                logger.info(f"CSV 已写入 {csv_path}")
                if scenario.outputs.figure is not None:
                    plot_path = csv_path.with_suffix(".py")
                    script = render_run_script(scenario.outputs.figure, csv_path.name, tuple(CSV_COLUMNS))
                    plot_path.write_text(script, encoding="utf-8", newline="\n")
            elif scenario.outputs.figure is not None:
                logger.warning(f"场景 '{label}' 指定了 figure 但没有 csv 输出，不生成绘图脚本。")
        except (NHEntropyError, OSError):
            logger.exception(f"模拟场景 '{label}' 失败。", exc_info=True)
            raise
        except Exception as e:
            logger.exception(f"模拟场景 '{label}' 时发生意外错误: {e}", exc_info=True)
            raise WorkflowError(f"模拟场景 '{label}' 失败: {e}") from e

        elapsed = time.time() - start_time
        logger.info(f"场景 '{label}' 模拟完成，{len(samples)} 个网格点，耗时 {elapsed:.2f} 秒。")
        return SimulationResult(scenario=scenario, samples=samples, csv_path=csv_path, plot_path=plot_path, elapsed=elapsed)

    def run_batch(
        self,
        scenarios: Sequence[Scenario],
        out_dir: Union[str, Path, None] = None,
        workers: int = 1,
    ) -> List[SimulationResult]:
        """
        并行执行多个相互独立的场景，结果顺序与输入一致。

        Raises:
            WorkflowError: 两个场景写同一个 CSV 路径。
        """
        targets = [s.outputs.csv for s in scenarios if s.outputs.csv]
        duplicates = sorted({t for t in targets if targets.count(t) > 1})
        if duplicates:
            raise WorkflowError(f"多个场景写入同一个 CSV: {duplicates}")
        if workers <= 1 or len(scenarios) <= 1:
            return [self.run(scenario, out_dir) for scenario in scenarios]
        logger.info(f"以 {workers} 个线程并行执行 {len(scenarios)} 个场景。")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda scenario: self.run(scenario, out_dir), scenarios))
