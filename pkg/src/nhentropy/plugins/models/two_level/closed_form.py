# src/nhentropy/plugins/models/two_level/closed_form.py

"""
两能级模型在 |γ̃| > 1 区域内的解析解 (ħ = 1，τ = Δt，x = 2μτ)。

    f_y = (μp̄/2)·sinh x − γ̃(cosh x − 1)/2
    f_z = μ²p̄·cosh x − μγ̃·sinh x
    F   = γ̃²·cosh x − μp̄γ̃·sinh x − 1

    Ω̂  = e^{−kx}/(2μ²)·[2f_y σ̂_y + f_z σ̂_z + F·Î]
    ρ̂  = (f_y/F)σ̂_y + (f_z/2F)σ̂_z + Î/2

f_y、f_z、F 随 e^{x} 增长，这里统一乘以 e^{−x} 后再计算，
ln F = x + ln(F·e^{−x})，大 τ 时不会溢出。
"""
import math
from typing import Dict, NamedTuple, Optional, Tuple

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import from_bloch
from nhentropy.core.config.settings import get_settings
from nhentropy.core.entropy.functionals import K_B, s_vn
from nhentropy.core.exceptions import ModelParameterError, ProbabilityExtinctError
from nhentropy.core.interfaces.base_model_provider import ClosedFormSolution
from nhentropy.plugins.models.two_level.params import TwoLevelParams


class _Scaled(NamedTuple):
    """e^{−x}·(f_y, f_z, F) 以及 x。"""
    fy: float
    fz: float
    f: float
    x: float


def _check_tau(tau: float) -> None:
    if not (math.isfinite(tau) and tau >= 0.0):
        raise ModelParameterError("tau", f"必须是非负有限实数，得到 {tau}")


def _scaled_components(params: TwoLevelParams, tau: float) -> _Scaled:
    _check_tau(tau)
    mu, gt, pb = params.mu, params.gamma_tilde, params.p_bar
    x = 2.0 * mu * tau
    e = math.exp(-x)
    c = 0.5 * (1.0 + e * e)
    s = -0.5 * math.expm1(-2.0 * x)
    fy = 0.5 * mu * pb * s - 0.5 * gt * (c - e)
    fz = mu * mu * pb * c - mu * gt * s
    f = gt * gt * c - mu * pb * gt * s - e
    return _Scaled(fy, fz, f, x)


def fyfzF(params: TwoLevelParams, tau: float) -> Tuple[float, float, float]:
    """
    返回未缩放的 (f_y, f_z, F)。τ = 0 时为 (0, μ²p̄, μ²)。

    Raises:
        ClosedFormDomainError: |γ̃| <= 1。
        ModelParameterError: τ 为负。
    """
    sc = _scaled_components(params, tau)
    growth = math.exp(sc.x)
    return sc.fy * growth, sc.fz * growth, sc.f * growth


def log_f(params: TwoLevelParams, tau: float) -> float:
    """ln F(τ)。"""
    sc = _scaled_components(params, tau)
    if sc.f <= 0.0:
        raise ProbabilityExtinctError(sc.f, tau)
    return sc.x + math.log(sc.f)


def omega_closed(params: TwoLevelParams, tau: float) -> ComplexMatrix:
    """
    非归一化密度算符 Ω̂(τ)，含规范因子 e^{−2kμτ}。τ = 0 时等于 diag(p, 1 − p)。
    """
    sc = _scaled_components(params, tau)
    mu = params.mu
    factor = math.exp(sc.x * (1.0 - params.k)) / (2.0 * mu * mu)
    return from_bloch(factor * sc.f, 0.0, factor * 2.0 * sc.fy, factor * sc.fz)


def rho_closed(params: TwoLevelParams, tau: float) -> ComplexMatrix:
    """
    归一化密度算符，与 k 无关。

    Raises:
        ProbabilityExtinctError: F(τ) <= 0。
    """
    sc = _scaled_components(params, tau)
    if sc.f <= 0.0:
        raise ProbabilityExtinctError(sc.f, tau)
    return from_bloch(0.5, 0.0, sc.fy / sc.f, 0.5 * sc.fz / sc.f)


def trace_closed(params: TwoLevelParams, tau: float) -> float:
    """Tr Ω̂ = e^{−2kμτ}·F/μ²。"""
    mu = params.mu
    return math.exp(log_f(params, tau) - math.log(mu * mu) - 2.0 * params.k * mu * tau)


def svn_closed(params: TwoLevelParams, tau: float) -> float:
    """由 rho_closed 的本征值计算的 von Neumann 熵。"""
    return s_vn(rho_closed(params, tau))


def _scaled_f_components(params: TwoLevelParams, sc: _Scaled) -> Tuple[float, float]:
    """e^{−2x}·(F₁, F₂)。"""
    mu, gt, pb = params.mu, params.gamma_tilde, params.p_bar
    x = sc.x
    e1, e2, e3, e4 = (math.exp(-n * x) for n in (1, 2, 3, 4))
    f1 = sc.f * sc.f - mu ** 4 * (1.0 - pb * pb) * e2
    f2 = (
        mu * pb * gt * ((e1 - e3) - 0.5 * gt * gt * (1.0 - e4))
        + 0.5 * gt * gt * (0.5 * (mu * mu * (pb * pb + 1.0) + 1.0) * (1.0 + e4) - 2.0 * (e1 + e3))
        + 0.5 * (mu ** 4 * (pb * pb - 1.0) - mu * mu * (pb * pb - 2.0) + 3.0) * e2
    )
    return f1, f2


def f_components(params: TwoLevelParams, tau: float) -> Tuple[float, float]:
    """
    返回 (F₁, F₂)。F₁ = F² − μ⁴(1 − p̄²) = 4f_y² + f_z²，
    F₂ 按 cosh/sinh(4μτ) 的展开式计算；两者在 τ = 0 时都等于 μ⁴p̄²。
    """
    sc = _scaled_components(params, tau)
    f1, f2 = _scaled_f_components(params, sc)
    growth = math.exp(2.0 * sc.x)
    return f1 * growth, f2 * growth


def svn_literal(params: TwoLevelParams, tau: float, cutoff: Optional[float] = None) -> float:
    """
    −F₊⁽²⁾ ln F₊⁽¹⁾ − F₋⁽²⁾ ln F₋⁽¹⁾，其中 F±⁽ⁱ⁾ = ½[1 ± √Fᵢ/F]。

    F₂ 明显小于 0 时平方根无定义，返回 NaN。仅用于和本征值结果对比。
    """
    cut = get_settings().entropy_cutoff if cutoff is None else cutoff
    sc = _scaled_components(params, tau)
    if sc.f <= 0.0:
        raise ProbabilityExtinctError(sc.f, tau)
    f1, f2 = _scaled_f_components(params, sc)
    if f2 < -1e-12 * sc.f * sc.f:
        return float("nan")
    r1 = math.sqrt(max(f1, 0.0)) / sc.f
    r2 = math.sqrt(max(f2, 0.0)) / sc.f
    total = 0.0
    for sign in (1.0, -1.0):
        weight = 0.5 * (1.0 + sign * r2)
        inside = 0.5 * (1.0 + sign * r1)
        if inside > cut:
            total -= weight * math.log(inside)
    return K_B * total


def snh_closed(params: TwoLevelParams, tau: float) -> float:
    """S_NH = S_vN − ln(F/μ²) + 2kμτ。"""
    mu = params.mu
    return svn_closed(params, tau) - (log_f(params, tau) - math.log(mu * mu)) + 2.0 * params.k * mu * tau


def snh_limit(params: TwoLevelParams) -> Optional[float]:
    """
    k = 1 时 S_NH 的 τ → ∞ 极限 ln[2μ²/(γ̃(γ̃ − μp̄))]；其他 k 下 S_NH 线性发散，返回 None。
    """
    if not math.isclose(params.k, 1.0, rel_tol=0.0, abs_tol=1e-12):
        return None
    mu, gt = params.mu, params.gamma_tilde
    return math.log(2.0 * mu * mu / (gt * (gt - mu * params.p_bar)))


def omega_determinant(params: TwoLevelParams, tau: float) -> float:
    """det Ω̂(τ) = e^{−4kμτ}·p(1 − p)。"""
    _check_tau(tau)
    return math.exp(-4.0 * params.k * params.mu * tau) * params.p * (1.0 - params.p)


class TwoLevelSolution(ClosedFormSolution):
    """以原始时间 t 为自变量的解析解，τ = Δt。"""

    def __init__(self, params: TwoLevelParams):
        # 提前触发定义域检查
        _ = params.mu
        self.params = params

    def _tau(self, t: float) -> float:
        return self.params.delta * t

    def trace(self, t: float) -> float:
        return trace_closed(self.params, self._tau(t))

    def s_vn(self, t: float) -> float:
        return svn_closed(self.params, self._tau(t))

    def s_nh(self, t: float) -> float:
        return snh_closed(self.params, self._tau(t))

    def omega(self, t: float) -> ComplexMatrix:
        return omega_closed(self.params, self._tau(t))

    def rho(self, t: float) -> ComplexMatrix:
        return rho_closed(self.params, self._tau(t))

    def diagnostics(self, t: float) -> Dict[str, float]:
        tau = self._tau(t)
        f1, f2 = f_components(self.params, tau)
        return {
            "F1": f1,
            "F2": f2,
            "svn_literal": svn_literal(self.params, tau),
            "det_omega": omega_determinant(self.params, tau),
        }
