# src/nhentropy/core/scenario/models.py

"""
定义场景的数据模型 (使用 Pydantic)。
场景描述一次完整的模拟: 选用的物理模型及其参数、时间网格、积分器与输出。
"""
from enum import Enum
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FigureId(str, Enum):
    """可重新生成的曲线图编号。"""
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"
    FIG5 = "fig5"
    FIG6 = "fig6"
    FIG7 = "fig7"


class OutputSpec(BaseModel):
    """输出配置: CSV 路径 (相对于输出目录) 与可选的图编号。"""
    csv: Optional[str] = None
    figure: Optional[FigureId] = None


class Scenario(BaseModel):
    """
    一次模拟的完整描述。

    Attributes:
        model: 模型插件名称 (const_gamma | two_level | custom 或第三方插件)。
        params: 模型插件校验并转换后的参数对象。
        constants: 用户在场景中定义的常量 (``const name = value``)。
        t_max: 模拟的原始时间长度 t (不是 τ)。
        samples: 时间网格点数 (含两端)。
        integrator: "rk4" 或 "exact"。
        substeps: RK4 每单位时间的子步数，None 表示使用配置默认值。
        outputs: 输出配置。
        source: 场景来源 (文件路径)，仅用于日志。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    model: str
    params: Any
    constants: Dict[str, float] = Field(default_factory=dict)
    t_max: float = Field(gt=0)
    samples: int = Field(ge=2)
    integrator: Literal["rk4", "exact"] = "rk4"
    substeps: Optional[int] = Field(default=None, gt=0)
    outputs: OutputSpec = Field(default_factory=OutputSpec)
    source: Optional[str] = None

    @model_validator(mode="after")
    def _check_params(self) -> "Scenario":
        if self.params is None:
            raise ValueError("场景缺少模型参数")
        return self

    def with_updates(self, **changes: Any) -> "Scenario":
        """返回修改了部分字段的副本 (例如扫描 k 时替换 params)。"""
        return self.model_copy(update=changes)
