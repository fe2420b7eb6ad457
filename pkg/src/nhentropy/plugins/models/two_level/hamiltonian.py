# src/nhentropy/plugins/models/two_level/hamiltonian.py
from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.algebra.operators import Axis, NHHamiltonian, identity, pauli
from nhentropy.core.exceptions import ClosedFormDomainError, ModelParameterError
from nhentropy.plugins.models.common import diagonal_state
from nhentropy.plugins.models.two_level.params import TwoLevelParams


def initial_state(p: float) -> ComplexMatrix:
    """
    diag(p, 1 − p)：p 为激发态权重，p ∈ {0, 1} 时为纯态。

    Raises:
        ModelParameterError: p 不在 [0, 1] 内。
    """
    if not 0.0 <= p <= 1.0:
        raise ModelParameterError("p", f"必须在 [0, 1] 内，得到 {p}")
    return diagonal_state(p)


def build_hamiltonian(params: TwoLevelParams) -> NHHamiltonian:
    """
    Ĥ = −Δσ̂_x，Γ̂ = γσ̂_z + k·μΔ·Î。

    Raises:
        ModelParameterError: k ≠ 0 且 |γ̃| <= 1 (平移量中的 μ 无定义)。
    """
    gamma_op = params.gamma * pauli(Axis.Z)
    if params.k != 0.0:
        try:
            mu = params.mu
        except ClosedFormDomainError as exc:
            raise ModelParameterError("k", f"k ≠ 0 需要 |γ/Δ| > 1，得到 γ/Δ = {params.gamma_tilde:.6g}") from exc
        gamma_op = gamma_op + (params.k * mu * params.delta) * identity(2)
    return NHHamiltonian(h=-params.delta * pauli(Axis.X), gamma=gamma_op)
