# src/nhentropy/plugins/models/custom/provider.py
import logging
import math
from typing import Any, Dict, Mapping, Optional

from pydantic import BaseModel, ConfigDict

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import NHHamiltonian
from nhentropy.core.exceptions import DimensionMismatchError, ModelParameterError
from nhentropy.core.interfaces.base_model_provider import BaseModelProvider
from nhentropy.plugins.models.common import (
    density_param,
    diagonal_state,
    operator_param,
    probability_param,
    real_param,
    require_keys,
)
from nhentropy.plugins.parsers.operator_expr import RESERVED_NAMES

logger = logging.getLogger(__name__)

# 由 delta/gamma 派生、不能被用户常量覆盖的名字
DERIVED_NAMES = frozenset({"delta", "gamma", "mu"})


class CustomParams(BaseModel):
    """
    Attributes:
        ham: 由表达式求值得到的 (Ĥ, Γ̂)。
        rho0: 初始密度算符。
        delta: 可选的特征频率，给出时 τ = delta·t。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ham: NHHamiltonian
    rho0: ComplexMatrix
    delta: Optional[float] = None


def expression_env(raw: Mapping[str, Any], constants: Optional[Mapping[str, float]] = None) -> Dict[str, complex]:
    """
    表达式中可引用的名字：delta、gamma、|gamma/delta| > 1 时的 mu，以及用户常量。
    """
    env: Dict[str, complex] = {}
    for name, value in (constants or {}).items():
        if name in RESERVED_NAMES or name in DERIVED_NAMES:
            raise ModelParameterError(name, f"常量名 '{name}' 是保留名字")
        env[name] = complex(value)
    delta = real_param(raw, "delta") if "delta" in raw else None
    gamma = real_param(raw, "gamma") if "gamma" in raw else None
    if delta is not None:
        if delta <= 0.0:
            raise ModelParameterError("delta", f"必须为正，得到 {delta}")
        env["delta"] = delta
    if gamma is not None:
        env["gamma"] = gamma
    if delta is not None and gamma is not None and abs(gamma / delta) > 1.0:
        env["mu"] = math.sqrt((gamma / delta) ** 2 - 1.0)
    return env


class CustomModel(BaseModelProvider):
    """
    用算符表达式直接给出 Ĥ 与 Γ̂ 的通用模型，没有解析解。
    """
    name = "custom"
    required_keys = frozenset({"H", "Gamma"})
    optional_keys = frozenset({"p", "rho0", "delta", "gamma"})

    def coerce(self, raw: Mapping[str, Any], constants: Optional[Mapping[str, float]] = None) -> CustomParams:
        require_keys(raw, self.required_keys)
        env = expression_env(raw, constants)
        h = operator_param(raw, "H", env)
        gamma_op = operator_param(raw, "Gamma", env)
        try:
            ham = NHHamiltonian(h=h, gamma=gamma_op)
        except DimensionMismatchError as exc:
            raise ModelParameterError("Gamma", f"维数与 H 不一致: {exc}") from exc

        if "p" in raw and "rho0" in raw:
            raise ModelParameterError("rho0", "p 与 rho0 只能给出一个", reason_code="invalid_value")
        if "rho0" in raw:
            rho0 = density_param(operator_param(raw, "rho0", env), "rho0")
            if rho0.dim != ham.dim:
                raise ModelParameterError("rho0", f"维数 {rho0.dim} 与 H 的维数 {ham.dim} 不一致")
        else:
            p = probability_param(raw, "p")
            if ham.dim != 2:
                raise ModelParameterError("p", f"diag(p, 1 − p) 只适用于 2×2 的 H，得到 {ham.dim}×{ham.dim}")
            rho0 = diagonal_state(p)
        delta = env.get("delta")
        logger.debug(f"自定义模型: dim={ham.dim}, 常量 {sorted(env)}")
        return CustomParams(ham=ham, rho0=rho0, delta=None if delta is None else delta.real)

    def build_hamiltonian(self, params: CustomParams) -> NHHamiltonian:
        return params.ham

    def initial_state(self, params: CustomParams) -> ComplexMatrix:
        return params.rho0

    def time_scale(self, params: CustomParams) -> float:
        return 1.0 if params.delta is None else params.delta
