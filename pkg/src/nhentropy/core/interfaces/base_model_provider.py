# src/nhentropy/core/interfaces/base_model_provider.py
import abc
from typing import Any, ClassVar, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import NHHamiltonian
from nhentropy.core.interfaces.base_plugin import BasePluginInterface


class ClosedFormSolution(abc.ABC):
    """
    模型的解析解。所有方法的时间参数均为原始时间 t。
    只有部分量有解析表达式时，其余方法返回 None。
    """

    @abc.abstractmethod
    def trace(self, t: float) -> float:
        """Tr Ω̂(t)。"""

    @abc.abstractmethod
    def s_vn(self, t: float) -> float:
        """S_vN(t)。"""

    @abc.abstractmethod
    def s_nh(self, t: float) -> float:
        """S_NH(t)。"""

    def omega(self, t: float) -> Optional[ComplexMatrix]:
        return None

    def rho(self, t: float) -> Optional[ComplexMatrix]:
        return None

    def diagnostics(self, t: float) -> Dict[str, float]:
        """附加的诊断量 (例如 F₁ 与 F₂)，默认为空。"""
        return {}


class BaseModelProvider(BasePluginInterface, abc.ABC):
    """
    物理模型插件接口定义。
    负责把场景中的参数映射转换为 (ℋ̂, 初始 Ω̂, 时间尺度)，并在可能时提供解析解。
    """
    name: ClassVar[str]
    required_keys: ClassVar[FrozenSet[str]] = frozenset()
    optional_keys: ClassVar[FrozenSet[str]] = frozenset()

    @property
    def allowed_keys(self) -> FrozenSet[str]:
        return self.required_keys | self.optional_keys

    @abc.abstractmethod
    def coerce(self, raw: Mapping[str, Any], constants: Optional[Mapping[str, float]] = None) -> BaseModel:
        """
        校验并转换参数映射。

        Args:
            raw: 参数名到值的映射。值可以是场景文件中的原始文本，也可以是已转换的数值。
            constants: 用户定义的常量，可在算符表达式中引用。

        Returns:
            BaseModel: 模型特定的参数对象。

        Raises:
            ModelParameterError: 参数缺失、无法解析或超出范围 (携带参数名)。
        """

    @abc.abstractmethod
    def build_hamiltonian(self, params: BaseModel) -> NHHamiltonian:
        """构造非厄米哈密顿量 (Ĥ, Γ̂)。"""

    @abc.abstractmethod
    def initial_state(self, params: BaseModel) -> ComplexMatrix:
        """初始 Ω̂(0)。"""

    def time_scale(self, params: BaseModel) -> float:
        """τ = time_scale·t；没有特征频率的模型返回 1。"""
        return 1.0

    def closed_form(self, params: BaseModel) -> Optional[ClosedFormSolution]:
        """
        返回解析解；模型没有解析解或参数超出其定义域时返回 None。
        """
        return None

    def threshold_scan(
        self,
        params: BaseModel,
        k_values: Sequence[float],
        tau_probe: Optional[float] = None,
        method: str = "closed",
    ) -> List[Tuple[float, float]]:
        """
        对一组规范乘子 k 估计 S_NH 的大 τ 斜率，返回 (k, 斜率) 列表。

        Raises:
            NotImplementedError: 模型没有规范乘子参数。
        """
        raise NotImplementedError(f"模型 '{self.name}' 不支持阈值扫描。")
