# src/nhentropy/core/workflows/plotting.py

"""
曲线图的定义与绘图脚本模板。生成的脚本只依赖 numpy 与 matplotlib，读取同目录下的 CSV。
"""
from typing import Dict, Mapping, NamedTuple, Tuple

from nhentropy.core.scenario.models import FigureId

GAMMA_TILDES = (-2.0, 2.0)
P_VALUES = (0.01, 0.25, 0.5, 0.75, 0.99)
# 与 P_VALUES 一一对应: 实线、虚线、点划线、点线、双点划线
LINE_STYLES = ("'-'", "'--'", "'-.'", "':'", "(0, (6, 2, 1, 2, 1, 2))")

CurveKey = Tuple[float, float]


class FigureSpec(NamedTuple):
    quantity: str
    k: float
    label: str


FIGURE_SPECS: Dict[FigureId, FigureSpec] = {
    FigureId.FIG1: FigureSpec("s_vn", 0.0, "S_vN"),
    FigureId.FIG2: FigureSpec("s_nh", 0.0, "S_NH"),
    FigureId.FIG3: FigureSpec("trace_omega", 0.0, "Tr Omega"),
    FigureId.FIG4: FigureSpec("s_nh", 1.0, "S_NH"),
    FigureId.FIG5: FigureSpec("trace_omega", 1.0, "Tr Omega"),
    FigureId.FIG6: FigureSpec("s_nh", 1.5, "S_NH"),
    FigureId.FIG7: FigureSpec("trace_omega", 1.5, "Tr Omega"),
}

_HEADER = '''"""{title} 由 nhentropy 生成。"""
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

HERE = Path(__file__).resolve().parent
'''


def render_plot_script(figure_id: FigureId, curve_files: Mapping[CurveKey, str]) -> str:
    """生成双面板 (上 γ̃ = −2，下 γ̃ = 2) 绘图脚本，每条曲线读取一个两列 CSV。"""
    spec = FIGURE_SPECS[figure_id]
    panels = []
    for gamma_tilde in GAMMA_TILDES:
        curves = ",\n".join(
            f"        ({p!r}, {curve_files[(gamma_tilde, p)]!r}, {style})"
            for p, style in zip(P_VALUES, LINE_STYLES)
        )
        panels.append(f"    ({gamma_tilde!r}, [\n{curves},\n    ]),")
    header = _HEADER.format(title=f"{figure_id.value}: {spec.label} (k = {spec.k:g}) vs tau.")
    return header + f'''PANELS = [
{chr(10).join(panels)}
]

fig, axes = plt.subplots(2, 1, sharex=True, figsize=(6, 8))
for ax, (gamma_tilde, curves) in zip(axes, PANELS):
    for p, filename, style in curves:
        data = np.loadtxt(HERE / filename, delimiter=",", skiprows=1)
        ax.plot(data[:, 0], data[:, 1], linestyle=style, color="black", label=f"p = {{p:g}}")
    ax.set_title(f"gamma/Delta = {{gamma_tilde:g}}")
    ax.set_ylabel({spec.label!r})
    ax.legend()
axes[-1].set_xlabel("tau")
fig.tight_layout()
fig.savefig(HERE / "{figure_id.value}.pdf")
plt.show()
'''


def render_run_script(figure_id: FigureId, csv_name: str, columns: Tuple[str, ...]) -> str:
    """单次运行的绘图脚本: 从运行 CSV 中取出该图对应的列，对 tau 作图。"""
    spec = FIGURE_SPECS[figure_id]
    header = _HEADER.format(title=f"{csv_name}: {spec.label} vs tau ({figure_id.value}).")
    return header + f'''COLUMNS = {list(columns)!r}

data = np.genfromtxt(HERE / {csv_name!r}, delimiter=",", skip_header=1)
tau = data[:, COLUMNS.index("tau")]
values = data[:, COLUMNS.index({spec.quantity!r})]
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(tau, values, color="black")
ax.set_xlabel("tau")
ax.set_ylabel({spec.label!r})
fig.tight_layout()
fig.savefig(HERE / {(csv_name.rsplit(".", 1)[0] + ".pdf")!r})
plt.show()
'''
