# src/nhentropy/core/algebra/spectral.py

"""
谱分解相关的矩阵函数: 厄米本征分解、矩阵指数与半正定矩阵的对数。

厄米本征分解默认使用 numpy.linalg.eigh，也可通过配置
``eig_solver = "jacobi"`` 切换到循环复 Jacobi 方法 (适用于 2 到 16 维的小矩阵)。
一般 (非正规) 矩阵的指数交给 scipy.linalg.expm (缩放与平方 + 13 阶 Padé)。
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Literal, Optional, Tuple

import numpy as np
import scipy.linalg
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, field_validator

from nhentropy.core.algebra.matrix import ComplexMatrix, require_hermitian
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import (
    ConvergenceError,
    MatrixOverflowError,
    NonFiniteError,
    NotPositiveSemidefiniteError,
)

logger = logging.getLogger(__name__)

EigSolver = Literal["numpy", "jacobi"]


class SpectralDecomposition(BaseModel):
    """
    厄米矩阵的本征分解 M = V·diag(λ)·V†。

    Attributes:
        eigenvalues: 升序排列的实本征值。
        eigenvectors: 列向量为对应的正交归一本征向量。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: Tuple[float, ...]
    eigenvectors: ComplexMatrix

    @field_validator("eigenvalues")
    @classmethod
    def _ascending(cls, values: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError("本征值必须升序排列")
        return values

    @property
    def values(self) -> NDArray[np.float64]:
        return np.asarray(self.eigenvalues, dtype=np.float64)

    def apply(self, func: Callable[[NDArray[np.float64]], NDArray]) -> ComplexMatrix:
        """按谱作用标量函数: V·diag(func(λ))·V†。"""
        v = self.eigenvectors.data
        return ComplexMatrix((v * func(self.values)) @ v.conj().T)

    def reconstruct(self) -> ComplexMatrix:
        return self.apply(lambda x: x)


def _jacobi_eigh(a: NDArray[np.complex128], max_sweeps: int) -> Tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """
    循环复 Jacobi 方法。

    每次旋转先用相位矩阵把 a_pq 变成实数 |a_pq|，再做实 Givens 旋转将其消去。
    收敛判据: 非对角 Frobenius 范数 <= 1e-13·‖A‖_F。
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = np.linalg.norm(a)
    threshold = 1e-13 * scale

    def off_norm(m: NDArray[np.complex128]) -> float:
        return float(np.linalg.norm(m - np.diag(np.diag(m))))

    sweeps = 0
    off = off_norm(a)
    while off > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, off)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                beta = abs(b)
                if beta == 0.0:
                    continue
                phase = b / beta
                theta = 0.5 * math.atan2(2.0 * beta, a[q, q].real - a[p, p].real)
                c, s = math.cos(theta), math.sin(theta)
                g = np.eye(n, dtype=np.complex128)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * np.conj(phase)
                g[q, q] = c * np.conj(phase)
                a = g.conj().T @ a @ g
                v = v @ g
        off = off_norm(a)
    logger.debug(f"Jacobi 本征分解在 {sweeps} 次扫描后收敛 (非对角范数 {off:.3e})。")
    return np.real(np.diag(a)).copy(), v


def herm_eig(m: ComplexMatrix, solver: Optional[EigSolver] = None, atol: Optional[float] = None) -> SpectralDecomposition:
    """
    厄米矩阵的本征分解，本征值升序。

    Args:
        m: 厄米矩阵 (容差 atol)。
        solver: "numpy" 或 "jacobi"，缺省取配置 eig_solver。
        atol: 厄米性检查容差，缺省取配置 atol。

    Returns:
        SpectralDecomposition: 满足重构误差与正交归一性要求的分解。

    Raises:
        NonHermitianError: m 不是厄米的。
        ConvergenceError: Jacobi 扫描次数超过上限。
    """
    settings = get_settings()
    require_hermitian(m, "M", atol)
    data = 0.5 * (m.data + m.data.conj().T)
    solver = solver or settings.eig_solver
    if solver == "jacobi":
        values, vectors = _jacobi_eigh(data, settings.jacobi_max_sweeps)
        order = np.argsort(values, kind="stable")
        values, vectors = values[order], vectors[:, order]
    else:
        values, vectors = np.linalg.eigh(data)
    return SpectralDecomposition(
        eigenvalues=tuple(float(x) for x in values),
        eigenvectors=ComplexMatrix(vectors),
    )


def eigenvalues(m: ComplexMatrix, atol: Optional[float] = None) -> NDArray[np.float64]:
    """厄米矩阵的升序本征值。"""
    require_hermitian(m, "M", atol)
    return np.linalg.eigvalsh(0.5 * (m.data + m.data.conj().T))


def require_psd(values: NDArray[np.float64], neg_tol: Optional[float] = None) -> None:
    """若最小本征值低于 -neg_tol，抛出 NotPositiveSemidefiniteError。"""
    tol = get_settings().neg_tol if neg_tol is None else neg_tol
    smallest = float(np.min(values))
    if smallest < -tol:
        raise NotPositiveSemidefiniteError(smallest, tol)


def mat_exp(m: ComplexMatrix, max_norm: Optional[float] = None) -> ComplexMatrix:
    """
    矩阵指数 e^m。

    厄米与反厄米的参数走本征分解路线，其余交给 scipy.linalg.expm。
    结果范数的指数增长由厄米部分的最大本征值决定，
    其谱范数超过 expm_max_norm 时判定溢出。

    Raises:
        MatrixOverflowError: 厄米部分的谱范数超过上限，或结果出现非有限值。
    """
    limit = get_settings().expm_max_norm if max_norm is None else max_norm
    data = m.data
    herm_part = 0.5 * (data + data.conj().T)
    growth = float(np.linalg.norm(herm_part, 2))
    if growth > limit:
        raise MatrixOverflowError(growth, limit)

    tol = get_settings().atol * max(1.0, m.max_abs())
    if m.hermitian_asymmetry() <= tol:
        values, vectors = np.linalg.eigh(herm_part)
        result = (vectors * np.exp(values)) @ vectors.conj().T
    elif float(np.max(np.abs(herm_part))) <= tol:
        # m = iK，K 厄米
        k = -0.5j * (data - data.conj().T)
        values, vectors = np.linalg.eigh(k)
        result = (vectors * np.exp(1j * values)) @ vectors.conj().T
    else:
        result = scipy.linalg.expm(data)
    try:
        return ComplexMatrix(result)
    except NonFiniteError as exc:
        raise MatrixOverflowError(growth, limit) from exc


def psd_log(
    m: ComplexMatrix,
    cutoff: Optional[float] = None,
    neg_tol: Optional[float] = None,
) -> ComplexMatrix:
    """
    半正定厄米矩阵的对数 V·ln(D)·V†。

    低于 cutoff 的本征值在熵求和中按 0·ln0 = 0 处理，
    此处对应的对数分量置为 0，调用方应结合本征值列表使用。

    Raises:
        NonHermitianError: m 不是厄米的。
        NotPositiveSemidefiniteError: 存在低于 -neg_tol 的本征值。
    """
    cut = get_settings().entropy_cutoff if cutoff is None else cutoff
    decomposition = herm_eig(m)
    require_psd(decomposition.values, neg_tol)

    def _log(values: NDArray[np.float64]) -> NDArray[np.float64]:
        safe = np.where(values > cut, values, 1.0)
        return np.where(values > cut, np.log(safe), 0.0)

    return decomposition.apply(_log)
