# src/nhentropy/plugins/models/const_gamma/provider.py
import logging
from typing import Any, Mapping, Optional

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import NHHamiltonian, identity
from nhentropy.core.exceptions import ModelParameterError
from nhentropy.core.interfaces.base_model_provider import BaseModelProvider
from nhentropy.plugins.models.common import diagonal_state, operator_param, probability_param, real_param, require_keys
from nhentropy.plugins.models.const_gamma.params import ConstGammaParams, ConstGammaSolution

logger = logging.getLogger(__name__)

DEFAULT_H = "0*id(2)"


class ConstGammaModel(BaseModelProvider):
    """
    衰减率算符正比于单位算符的模型，Γ̂ = (γ₀/2)·Î。
    """
    name = "const_gamma"
    required_keys = frozenset({"gamma0"})
    optional_keys = frozenset({"H", "p"})

    def coerce(self, raw: Mapping[str, Any], constants: Optional[Mapping[str, float]] = None) -> ConstGammaParams:
        require_keys(raw, self.required_keys)
        env = dict(constants or {})
        h = operator_param(raw, "H", env, default=DEFAULT_H)
        if h.dim != 2:
            raise ModelParameterError("H", f"初态 diag(p, 1 − p) 需要 2×2 的 H，得到 {h.dim}×{h.dim}")
        p = probability_param(raw, "p", default=0.5)
        return ConstGammaParams(gamma0=real_param(raw, "gamma0"), h=h, rho0=diagonal_state(p))

    def build_hamiltonian(self, params: ConstGammaParams) -> NHHamiltonian:
        return NHHamiltonian(h=params.h, gamma=(0.5 * params.gamma0) * identity(params.h.dim))

    def initial_state(self, params: ConstGammaParams) -> ComplexMatrix:
        return params.rho0

    def closed_form(self, params: ConstGammaParams) -> ConstGammaSolution:
        return ConstGammaSolution(params)
