# src/nhentropy/core/exceptions.py

"""
定义框架的核心自定义异常。

每个异常都带有一个机器可读的 ``code``，CLI 根据异常族映射退出码。
"""
from typing import Optional


class NHEntropyError(Exception):
    """应用的基础异常类，所有自定义业务异常应继承自此类。"""
    code: str = "nhentropy_error"

    def __init__(self, message: str = "nhentropy 发生未知错误。"):
        super().__init__(message)


# --- 核心错误 ---

class ConfigurationError(NHEntropyError):
    """配置相关的错误。"""
    code = "configuration_error"

    def __init__(self, message: str = "系统配置错误。"):
        super().__init__(message)


class WorkflowError(NHEntropyError):
    """工作流执行过程中发生的错误。"""
    code = "workflow_error"

    def __init__(self, message: str = "工作流执行失败。"):
        super().__init__(message)


class PluginNotFoundError(NHEntropyError):
    """请求的插件未找到或未注册。"""
    code = "plugin_not_found"

    def __init__(self, plugin_type: str, plugin_name: Optional[str] = None):
        message = f"未找到类型为 '{plugin_type}' 的插件"
        if plugin_name:
            message += f" (名称: '{plugin_name}')"
        message += "。请检查配置和插件注册。"
        self.plugin_type = plugin_type
        self.plugin_name = plugin_name
        super().__init__(message)


class PluginLoadError(NHEntropyError):
    """插件加载或实例化失败。"""
    code = "plugin_load_error"

    def __init__(self, message: str = "插件加载失败。", cause: Optional[BaseException] = None):
        if cause is not None:
            message = f"{message}: {cause}"
        super().__init__(message)


class PluginConfigurationError(ConfigurationError):
    """插件配置无效。"""
    code = "plugin_configuration_error"


class ModelParameterError(NHEntropyError):
    """
    模型参数缺失、类型错误或超出范围。

    Attributes:
        key: 出错的参数名。
        offset: 若错误发生在参数值内部 (例如算符表达式)，为值内的 1 起始列号。
        reason_code: 机器可读的原因，默认 "range_violation"。
    """
    code = "model_parameter_error"

    def __init__(self, key: str, reason: str, offset: Optional[int] = None, reason_code: str = "range_violation"):
        self.key = key
        self.reason = reason
        self.offset = offset
        self.reason_code = reason_code
        super().__init__(f"模型参数 '{key}' 无效: {reason}")


# --- 插件错误基类 ---

class PluginError(NHEntropyError):
    """所有插件相关错误的基类。"""
    code = "plugin_error"

    def __init__(self, plugin_name: str = "未知插件", message: str = "插件执行错误。"):
        self.plugin_name = plugin_name
        full_message = f"插件 '{plugin_name}' 发生错误: {message}"
        super().__init__(full_message)


class ParsingError(PluginError):
    """场景或表达式解析过程中发生的通用错误。"""
    code = "parsing_error"

    def __init__(self, plugin_name: str = "未知解析器", message: str = "解析失败。"):
        super().__init__(plugin_name=plugin_name, message=message)


# --- 数值内核错误 ---

class NumericalError(NHEntropyError):
    """数值内核 (算符代数、动力学、熵) 错误的基类。"""
    code = "numerical_error"


class DimensionMismatchError(NumericalError):
    """两个算符的维数不一致。"""
    code = "dimension_mismatch"

    def __init__(self, left: int, right: int, operation: str = "运算"):
        self.left = left
        self.right = right
        super().__init__(f"{operation}的维数不匹配: {left} != {right}。")


class NonHermitianError(NumericalError):
    """要求厄米的算符不满足厄米性。"""
    code = "non_hermitian"

    def __init__(self, part: str, asymmetry: float, atol: Optional[float] = None):
        self.part = part
        self.asymmetry = asymmetry
        message = f"算符 '{part}' 不是厄米的: max|M - M†| = {asymmetry:.3e}"
        if atol is not None:
            message += f" (容差 {atol:.1e})"
        super().__init__(message + "。")


class NotPositiveSemidefiniteError(NumericalError):
    """算符存在低于 -neg_tol 的本征值。"""
    code = "not_positive_semidefinite"

    def __init__(self, value: float, neg_tol: Optional[float] = None):
        self.value = value
        message = f"算符不是半正定的 (not positive semidefinite): 最小本征值 {value:.6e}"
        if neg_tol is not None:
            message += f" < -{neg_tol:.1e}"
        super().__init__(message + "。")


class ConvergenceError(NumericalError):
    """迭代算法未在上限内收敛。"""
    code = "convergence_error"

    def __init__(self, sweeps: int, off_norm: float = float("nan")):
        self.sweeps = sweeps
        self.off_norm = off_norm
        super().__init__(f"Jacobi 本征分解在 {sweeps} 次扫描后仍未收敛 (非对角范数 {off_norm:.3e})。")


class MatrixOverflowError(NumericalError):
    """矩阵指数的参数范数过大，结果会溢出。"""
    code = "matrix_overflow"

    def __init__(self, norm: float, limit: float):
        self.norm = norm
        self.limit = limit
        super().__init__(f"矩阵指数溢出: ‖m‖ = {norm:.6e} 超过上限 {limit:.1f}。")


class ProbabilityExtinctError(NumericalError):
    """Tr Ω 低于 trace_floor，无法归一化。"""
    code = "probability_extinct"

    def __init__(self, trace: float, time: Optional[float] = None):
        self.trace = trace
        self.time = time
        message = f"概率已消失 (probability extinct): Tr Ω = {trace:.6e}"
        if time is not None:
            message += f"，t = {time:.6g}"
        super().__init__(message + "。")


class TraceNormalizationError(NumericalError):
    """归一化密度算符的迹偏离 1。"""
    code = "trace_not_normalized"

    def __init__(self, trace: float, tol: float):
        self.trace = trace
        super().__init__(f"密度算符的迹偏离 1: Tr ρ = {trace:.15g} (容差 {tol:.1e})。")


class RateUndefinedError(NumericalError):
    """在纯态边界上，熵产生率包含发散的 ln ρ，不予定义。"""
    code = "rate_undefined"

    def __init__(self, min_eigenvalue: float, cutoff: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"熵产生率在纯态边界上无定义 (rate undefined at pure-state boundary): "
            f"最小本征值 {min_eigenvalue:.3e} < {cutoff:.1e}。"
        )


class InconsistentStateError(NumericalError):
    """(ρ, Ω) 不满足 normalize(Ω) = ρ。"""
    code = "inconsistent_state"

    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"ρ 与 Ω 不一致: max|Ω/TrΩ - ρ| = {deviation:.3e}。")


class InvariantViolationError(NumericalError):
    """积分过程中状态不变量被破坏。"""
    code = "invariant_violation"

    def __init__(self, time: float, detail: str):
        self.time = time
        super().__init__(f"t = {time:.6g} 时状态不变量被破坏: {detail}")


class ClosedFormDomainError(NumericalError):
    """参数超出解析解的定义域 (|γ̃| <= 1)。"""
    code = "outside_closed_form_domain"

    def __init__(self, gamma_tilde: float):
        self.gamma_tilde = gamma_tilde
        super().__init__(
            f"参数超出解析解定义域 (outside closed-form domain): |γ̃| = {abs(gamma_tilde):.6g} <= 1。"
        )


class NumericalBoundError(NHEntropyError):
    """比较报告中某项偏差超过了给定上限。"""
    code = "numerical_bound_exceeded"

    def __init__(self, message: str = "数值偏差超过上限。"):
        super().__init__(message)


class NonFiniteError(NumericalError):
    """矩阵中出现 NaN 或 Inf。"""
    code = "non_finite"

    def __init__(self, where: str = "矩阵"):
        super().__init__(f"{where}包含非有限值 (NaN/Inf)。")
