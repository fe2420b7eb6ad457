# src/nhentropy/plugins/models/two_level/provider.py
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import NHHamiltonian
from nhentropy.core.exceptions import ModelParameterError
from nhentropy.core.interfaces.base_model_provider import BaseModelProvider
from nhentropy.plugins.models.common import probability_param, real_param, require_keys
from nhentropy.plugins.models.two_level.closed_form import TwoLevelSolution
from nhentropy.plugins.models.two_level.config import TwoLevelSettings
from nhentropy.plugins.models.two_level.hamiltonian import build_hamiltonian, initial_state
from nhentropy.plugins.models.two_level.params import TwoLevelParams
from nhentropy.plugins.models.two_level.scan import threshold_scan

logger = logging.getLogger(__name__)


class TwoLevelModel(BaseModelProvider):
    """
    两能级失谐模型，规范乘子 k 选择 Γ̂ 的常数平移。
    配置可以来自 TwoLevelSettings (环境变量) 或插件管理器传入的 provider_config。
    """
    name = "two_level"
    required_keys = frozenset({"delta", "gamma", "p"})
    optional_keys = frozenset({"k"})

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__(config)
        self.settings = TwoLevelSettings(**(config or {}))
        logger.debug(f"TwoLevelModel 初始化: probe_factor={self.settings.probe_factor}")

    def coerce(self, raw: Mapping[str, Any], constants: Optional[Mapping[str, float]] = None) -> TwoLevelParams:
        require_keys(raw, self.required_keys)
        delta = real_param(raw, "delta")
        if delta <= 0.0:
            raise ModelParameterError("delta", f"必须为正，得到 {delta}")
        params = TwoLevelParams(
            delta=delta,
            gamma=real_param(raw, "gamma"),
            p=probability_param(raw, "p"),
            k=real_param(raw, "k", default=0.0),
        )
        if params.k != 0.0 and not params.in_closed_form_domain:
            raise ModelParameterError("k", f"k ≠ 0 需要 |γ/Δ| > 1，得到 γ/Δ = {params.gamma_tilde:.6g}")
        return params

    def build_hamiltonian(self, params: TwoLevelParams) -> NHHamiltonian:
        return build_hamiltonian(params)

    def initial_state(self, params: TwoLevelParams) -> ComplexMatrix:
        return initial_state(params.p)

    def time_scale(self, params: TwoLevelParams) -> float:
        return params.delta

    def closed_form(self, params: TwoLevelParams) -> Optional[TwoLevelSolution]:
        if not params.in_closed_form_domain:
            logger.info(f"γ/Δ = {params.gamma_tilde:.6g} 不在解析解定义域 |γ/Δ| > 1 内，跳过解析解。")
            return None
        return TwoLevelSolution(params)

    def threshold_scan(
        self,
        params: TwoLevelParams,
        k_values: Sequence[float],
        tau_probe: Optional[float] = None,
        method: str = "closed",
    ) -> List[Tuple[float, float]]:
        points = threshold_scan(params, k_values, tau_probe=tau_probe, method=method, settings=self.settings)
        return [(point.k, point.slope) for point in points]
