# src/nhentropy/core/workflows/figures.py

"""
曲线图数据工作流。

每张图由两能级模型在 γ̃ ∈ {−2, 2} 与 p ∈ {0.01, 1/4, 1/2, 3/4, 0.99} 下的 10 条曲线组成，
上面板为 γ̃ = −2，下面板为 γ̃ = 2。输出是逐曲线的 CSV 以及一个自包含的 matplotlib 绘图脚本，
不直接生成图片。
"""
import logging
import time
from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict

from nhentropy.core.entropy.profile import EntropySample
from nhentropy.core.exceptions import WorkflowError
from nhentropy.core.plugin_manager import PluginManager
from nhentropy.core.scenario.models import FigureId, OutputSpec, Scenario
from nhentropy.core.workflows.plotting import FIGURE_SPECS, GAMMA_TILDES, P_VALUES, CurveKey, render_plot_script
from nhentropy.core.workflows.simulation import SimulationWorkflow, write_frame

logger = logging.getLogger(__name__)

TAU_MAX = 4.0
FIGURE_SAMPLES = 401


class FigureArtifact(BaseModel):
    """emit_figure 写出的文件。"""
    model_config = ConfigDict(frozen=True)

    figure: FigureId
    script: Path
    curves: List[Path]


def _quantity(sample: EntropySample, quantity: str) -> float:
    return sample.trace_omega if quantity == "trace_omega" else getattr(sample, quantity)


def curve_filename(figure_id: FigureId, gamma_tilde: float, p: float) -> str:
    """例如 fig2_gt-2_p0.25.csv。"""
    return f"{figure_id.value}_gt{gamma_tilde:g}_p{p:g}.csv"


def figure_scenarios(figure_id: Union[FigureId, str], plugin_manager: PluginManager) -> Dict[CurveKey, Scenario]:
    """
    构造一张图需要的全部场景 (Δ = 1，τ ∈ [0, 4]，401 个采样点，精确传播)。

    Returns:
        以 (γ̃, p) 为键的场景字典，顺序为上面板到下面板、p 从小到大。
    """
    figure_id = FigureId(figure_id)
    spec = FIGURE_SPECS[figure_id]
    provider = plugin_manager.get_model("two_level")
    scenarios = {}
    for gamma_tilde in GAMMA_TILDES:
        for p in P_VALUES:
            params = provider.coerce({"delta": 1.0, "gamma": gamma_tilde, "p": p, "k": spec.k})
            scenarios[(gamma_tilde, p)] = Scenario(
                model="two_level",
                params=params,
                t_max=TAU_MAX,
                samples=FIGURE_SAMPLES,
                integrator="exact",
                outputs=OutputSpec(figure=figure_id),
                source=f"{figure_id.value}(gt={gamma_tilde:g}, p={p:g})",
            )
    return scenarios


def emit_figure(
    sample_sets: Mapping[CurveKey, Sequence[EntropySample]],
    figure_id: Union[FigureId, str],
    out_dir: Union[str, Path],
) -> FigureArtifact:
    """
    写出一张图的逐曲线 CSV (列 tau 与图中的量) 和绘图脚本。

    Raises:
        WorkflowError: 缺少某个 (γ̃, p) 组合。
    """
    figure_id = FigureId(figure_id)
    spec = FIGURE_SPECS[figure_id]
    missing = [(g, p) for g in GAMMA_TILDES for p in P_VALUES if (g, p) not in sample_sets]
    if missing:
        raise WorkflowError(f"{figure_id.value} 缺少参数组合 (γ̃, p): {missing}")

    out = Path(out_dir)
    files: Dict[CurveKey, str] = {}
    paths = []
    for key in ((g, p) for g in GAMMA_TILDES for p in P_VALUES):
        samples = sample_sets[key]
        frame = pd.DataFrame({
            "tau": [s.tau for s in samples],
            spec.quantity: [_quantity(s, spec.quantity) for s in samples],
        })
        name = curve_filename(figure_id, *key)
        paths.append(write_frame(frame, out / name))
        files[key] = name
    script = out / f"{figure_id.value}.py"
    script.write_text(render_plot_script(figure_id, files), encoding="utf-8", newline="\n")
    logger.info(f"{figure_id.value}: 写出 {len(paths)} 条曲线与绘图脚本 {script}")
    return FigureArtifact(figure=figure_id, script=script, curves=paths)


class FigureWorkflow:
    """
    重新生成曲线图数据的类。
    """
    def __init__(self, plugin_manager: PluginManager):
        self.plugin_manager = plugin_manager
        self.simulation = SimulationWorkflow(plugin_manager)

    def run(self, figure_id: Union[FigureId, str], out_dir: Union[str, Path, None] = None) -> FigureArtifact:
        start_time = time.time()
        figure_id = FigureId(figure_id)
        out = Path(out_dir if out_dir is not None else self.plugin_manager.settings.output_dir)
        scenarios = figure_scenarios(figure_id, self.plugin_manager)
        sample_sets = {key: self.simulation.simulate(scenario) for key, scenario in scenarios.items()}
        artifact = emit_figure(sample_sets, figure_id, out)
        logger.info(f"{figure_id.value} 生成完成，耗时 {time.time() - start_time:.2f} 秒。")
        return artifact
