# src/nhentropy/plugins/models/two_level/__init__.py
from .closed_form import (
    TwoLevelSolution,
    f_components,
    fyfzF,
    log_f,
    omega_closed,
    omega_determinant,
    rho_closed,
    snh_closed,
    snh_limit,
    svn_closed,
    svn_literal,
    trace_closed,
)
from .config import TwoLevelSettings
from .hamiltonian import build_hamiltonian, initial_state
from .params import TwoLevelParams
from .provider import TwoLevelModel
from .scan import ScanPoint, threshold_scan

__all__ = [
    "TwoLevelSolution",
    "f_components",
    "fyfzF",
    "log_f",
    "omega_closed",
    "omega_determinant",
    "rho_closed",
    "snh_closed",
    "snh_limit",
    "svn_closed",
    "svn_literal",
    "trace_closed",
    "TwoLevelSettings",
    "TwoLevelParams",
    "TwoLevelModel",
    "build_hamiltonian",
    "initial_state",
    "ScanPoint",
    "threshold_scan",
]
