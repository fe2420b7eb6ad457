# src/nhentropy/core/algebra/matrix.py

"""
稠密复矩阵值类型。

ComplexMatrix 是所有算符 (Ĥ, Γ̂, ℋ̂, Ω̂, ρ̂, Pauli 矩阵) 的载体。
实例不可变：内部 numpy 数组被设置为只读，运算总是返回新实例。
相等比较总是基于容差 (默认取配置中的 atol)。
"""
from __future__ import annotations

from numbers import Number
from typing import Any, Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import DimensionMismatchError, NonFiniteError, NonHermitianError

Scalar = Union[int, float, complex, np.number]


class ComplexMatrix:
    """N×N 复矩阵。"""

    __slots__ = ("_data",)
    __array_ufunc__ = None  # numpy 标量与本类运算时交给本类的反射方法

    def __init__(self, entries: Union[ArrayLike, "ComplexMatrix"]):
        if isinstance(entries, ComplexMatrix):
            data = entries._data
        else:
            data = np.array(entries, dtype=np.complex128)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise ValueError(f"ComplexMatrix 需要非空方阵，得到形状 {data.shape}")
        if not np.all(np.isfinite(data)):
            raise NonFiniteError("ComplexMatrix ")
        data = np.array(data, dtype=np.complex128, copy=True)
        data.setflags(write=False)
        self._data = data

    # --- 构造器 ---

    @classmethod
    def identity(cls, dim: int) -> "ComplexMatrix":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def zeros(cls, dim: int) -> "ComplexMatrix":
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    @classmethod
    def diag(cls, values: ArrayLike) -> "ComplexMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    # --- 基本属性 ---

    @property
    def dim(self) -> int:
        return int(self._data.shape[0])

    @property
    def data(self) -> NDArray[np.complex128]:
        """只读的底层数组。需要修改时请先 copy()。"""
        return self._data

    def __array__(self, dtype: Any = None, copy: Any = None) -> NDArray[Any]:
        if dtype is None:
            return self._data.copy()
        return self._data.astype(dtype)

    def dagger(self) -> "ComplexMatrix":
        """共轭转置 M†。"""
        return ComplexMatrix(self._data.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self._data))

    def real_trace(self) -> float:
        return float(np.trace(self._data).real)

    def norm(self, kind: Union[int, float, str, None] = None) -> float:
        """矩阵范数，kind 语义同 numpy.linalg.norm (默认 Frobenius)。"""
        return float(np.linalg.norm(self._data, kind))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._data)))

    def hermitian_asymmetry(self) -> float:
        """max|M - M†|。"""
        return float(np.max(np.abs(self._data - self._data.conj().T)))

    def is_hermitian(self, atol: Optional[float] = None) -> bool:
        tol = get_settings().atol if atol is None else atol
        return self.hermitian_asymmetry() <= tol

    def hermitize(self) -> "ComplexMatrix":
        """(M + M†)/2。"""
        return ComplexMatrix(0.5 * (self._data + self._data.conj().T))

    def allclose(self, other: Union["ComplexMatrix", ArrayLike], atol: Optional[float] = None) -> bool:
        tol = get_settings().atol if atol is None else atol
        other_data = _as_array(other)
        if other_data.shape != self._data.shape:
            return False
        return bool(np.max(np.abs(self._data - other_data)) <= tol)

    # --- 算术 ---

    def _check_dim(self, other: "ComplexMatrix", operation: str) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(self.dim, other.dim, operation)

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_dim(other, "矩阵加法")
        return ComplexMatrix(self._data + other._data)

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_dim(other, "矩阵减法")
        return ComplexMatrix(self._data - other._data)

    def __neg__(self) -> "ComplexMatrix":
        return ComplexMatrix(-self._data)

    def __mul__(self, scalar: Scalar) -> "ComplexMatrix":
        if not isinstance(scalar, (Number, np.number)):
            return NotImplemented
        return ComplexMatrix(self._data * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "ComplexMatrix":
        if not isinstance(scalar, (Number, np.number)):
            return NotImplemented
        return ComplexMatrix(self._data / complex(scalar))

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self._check_dim(other, "矩阵乘法")
        return ComplexMatrix(self._data @ other._data)

    # --- 比较与展示 ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexMatrix):
            return self.allclose(other)
        return NotImplemented

    __hash__ = None  # 基于容差的相等无法与哈希一致

    def __repr__(self) -> str:
        body = np.array2string(self._data, precision=6, suppress_small=True, separator=", ")
        return f"ComplexMatrix(dim={self.dim}, entries={body})"


def _as_array(value: Union[ComplexMatrix, ArrayLike]) -> NDArray[np.complex128]:
    if isinstance(value, ComplexMatrix):
        return value.data
    return np.asarray(value, dtype=np.complex128)


def as_matrix(value: Union[ComplexMatrix, ArrayLike]) -> ComplexMatrix:
    """把数组或 ComplexMatrix 统一转换为 ComplexMatrix。"""
    if isinstance(value, ComplexMatrix):
        return value
    return ComplexMatrix(value)


def require_hermitian(m: ComplexMatrix, part: str, atol: Optional[float] = None) -> None:
    """
    若 m 不是厄米的，抛出 NonHermitianError 并报告最大不对称量。

    容差按矩阵量级缩放: atol · max(1, max|m_ij|)，以容纳指数增长的 Ω。
    """
    tol = get_settings().atol if atol is None else atol
    tol *= max(1.0, m.max_abs())
    asymmetry = m.hermitian_asymmetry()
    if asymmetry > tol:
        raise NonHermitianError(part, asymmetry, tol)


def require_same_dim(a: ComplexMatrix, b: ComplexMatrix, operation: str) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(a.dim, b.dim, operation)
