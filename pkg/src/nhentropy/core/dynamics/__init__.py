# src/nhentropy/core/dynamics/__init__.py
# Ω̂ 与 ρ̂ 的时间演化
from .equations import normalize, rhs_omega, rhs_rho, trace_rate
from .integrator import integrate, rk4_step, substep_count
from .propagation import LogState, propagate_exact, propagate_log, propagator
from .state import EvolutionState, Trajectory, check_density

__all__ = [
    "normalize",
    "rhs_omega",
    "rhs_rho",
    "trace_rate",
    "integrate",
    "rk4_step",
    "substep_count",
    "LogState",
    "propagate_exact",
    "propagate_log",
    "propagator",
    "EvolutionState",
    "Trajectory",
    "check_density",
]
