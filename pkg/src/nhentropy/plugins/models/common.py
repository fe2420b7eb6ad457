# src/nhentropy/plugins/models/common.py

"""
模型插件共用的参数转换工具。

场景文件中的参数值是原始文本，程序化调用时可以直接传入数值或矩阵；
这里的函数统一完成转换，失败时抛出携带参数名的 ModelParameterError。
"""
import math
from typing import Any, Mapping, Optional

import numpy as np

from nhentropy.core.algebra.matrix import ComplexMatrix
from nhentropy.core.config.settings import get_settings
from nhentropy.core.exceptions import ModelParameterError, NHEntropyError
from nhentropy.plugins.parsers.operator_expr import ExpressionError, evaluate_text


def require_keys(raw: Mapping[str, Any], required: frozenset) -> None:
    for key in sorted(required):
        if key not in raw:
            raise ModelParameterError(key, "缺少必需参数", reason_code="missing")


def real_param(raw: Mapping[str, Any], key: str, default: Optional[float] = None) -> float:
    """读取实数参数；值为文本时按浮点数解析。"""
    if key not in raw:
        if default is None:
            raise ModelParameterError(key, "缺少必需参数", reason_code="missing")
        return float(default)
    value = raw[key]
    try:
        number = float(value.strip()) if isinstance(value, str) else float(value)
    except (TypeError, ValueError) as exc:
        raise ModelParameterError(key, f"不是实数: {value!r}", reason_code="invalid_value") from exc
    if not math.isfinite(number):
        raise ModelParameterError(key, f"必须是有限实数，得到 {number}")
    return number


def probability_param(raw: Mapping[str, Any], key: str, default: Optional[float] = None) -> float:
    value = real_param(raw, key, default)
    if not 0.0 <= value <= 1.0:
        raise ModelParameterError(key, f"必须在 [0, 1] 内，得到 {value}")
    return value


def operator_param(
    raw: Mapping[str, Any],
    key: str,
    env: Mapping[str, complex],
    default: Optional[str] = None,
) -> ComplexMatrix:
    """
    读取厄米算符参数。文本按算符表达式求值，数组或 ComplexMatrix 直接使用。

    表达式错误被包装为 ModelParameterError，offset 为表达式内的列号。
    """
    if key not in raw and default is None:
        raise ModelParameterError(key, "缺少必需参数", reason_code="missing")
    value = raw.get(key, default)
    if isinstance(value, str):
        try:
            return evaluate_text(value, env, hermitian_part=key)
        except ExpressionError as exc:
            raise ModelParameterError(key, exc.detail, offset=exc.column, reason_code=exc.code) from exc
    try:
        matrix = value if isinstance(value, ComplexMatrix) else ComplexMatrix(np.asarray(value))
    except (NHEntropyError, TypeError, ValueError) as exc:
        raise ModelParameterError(key, f"无法转换为矩阵: {exc}", reason_code="invalid_value") from exc
    if not matrix.is_hermitian():
        raise ModelParameterError(key, f"必须是厄米的，max|M - M†| = {matrix.hermitian_asymmetry():.3e}")
    return matrix


def density_param(matrix: ComplexMatrix, key: str) -> ComplexMatrix:
    """检查初始密度算符: 迹为 1 且半正定 (容差取配置 trace_tol 与 neg_tol)。"""
    settings = get_settings()
    trace_tol, neg_tol = settings.trace_tol, settings.neg_tol
    trace = matrix.real_trace()
    if abs(trace - 1.0) > trace_tol:
        raise ModelParameterError(key, f"初始密度算符的迹必须为 1，得到 {trace:.12g}")
    smallest = float(np.linalg.eigvalsh(matrix.hermitize().data)[0])
    if smallest < -neg_tol:
        raise ModelParameterError(key, f"初始密度算符必须半正定，最小本征值 {smallest:.3e}")
    return matrix


def diagonal_state(p: float) -> ComplexMatrix:
    """diag(p, 1 − p)。"""
    return ComplexMatrix.diag([p, 1.0 - p])
