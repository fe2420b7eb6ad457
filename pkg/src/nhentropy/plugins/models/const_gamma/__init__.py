# src/nhentropy/plugins/models/const_gamma/__init__.py
from .params import ConstGammaParams, ConstGammaSolution, const_gamma_solution
from .provider import ConstGammaModel

__all__ = [
    "ConstGammaParams",
    "ConstGammaSolution",
    "const_gamma_solution",
    "ConstGammaModel",
]
