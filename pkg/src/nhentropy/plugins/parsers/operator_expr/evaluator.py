# src/nhentropy/plugins/parsers/operator_expr/evaluator.py

"""
在常量环境中对算符表达式求值。

值要么是复标量，要么是 ComplexMatrix。标量与矩阵之间只允许乘法；
矩阵之间允许加减与矩阵乘法 (维数必须一致)。
"""
import cmath
from typing import Mapping, Optional, Union

from nhentropy.core.algebra.matrix import ComplexMatrix, require_hermitian
from nhentropy.core.algebra.operators import pauli
from nhentropy.core.exceptions import NHEntropyError, NonHermitianError
from nhentropy.plugins.parsers.operator_expr.exceptions import ExpressionEvaluationError
from nhentropy.plugins.parsers.operator_expr.nodes import BinOp, Call, Imag, Name, Neg, Node, Number
from nhentropy.plugins.parsers.operator_expr.parser import parse_operator_expr

Value = Union[complex, ComplexMatrix]

GENERATORS = {"sx": "x", "sy": "y", "sz": "z"}
FUNCTIONS = frozenset({"id"})
RESERVED_NAMES = frozenset({"i", *GENERATORS, *FUNCTIONS})
# id(n) 允许的最大维数
MAX_DIM = 64


def _finite(value: complex, column: int) -> complex:
    if not cmath.isfinite(value):
        raise ExpressionEvaluationError("数值溢出 (非有限值)", column=column)
    return value


def _evaluate(node: Node, env: Mapping[str, complex]) -> Value:
    if isinstance(node, Number):
        return _finite(complex(node.value), node.column)
    if isinstance(node, Imag):
        return _finite(complex(0.0, node.value), node.column)
    if isinstance(node, Name):
        if node.ident in GENERATORS:
            return pauli(GENERATORS[node.ident])
        if node.ident in env:
            return _finite(complex(env[node.ident]), node.column)
        if node.ident in FUNCTIONS:
            raise ExpressionEvaluationError(f"'{node.ident}' 需要参数，例如 {node.ident}(2)", column=node.column)
        raise ExpressionEvaluationError(f"未定义的名称 '{node.ident}'", column=node.column)
    if isinstance(node, Call):
        if node.func not in FUNCTIONS:
            raise ExpressionEvaluationError(f"未知的函数 '{node.func}'", column=node.column)
        if not float(node.arg).is_integer() or not 1 <= node.arg <= MAX_DIM:
            raise ExpressionEvaluationError(f"id 的参数必须是 1 到 {MAX_DIM} 之间的整数，得到 {node.arg}", column=node.column)
        return ComplexMatrix.identity(int(node.arg))
    if isinstance(node, Neg):
        operand = _evaluate(node.operand, env)
        return -operand
    if isinstance(node, BinOp):
        left = _evaluate(node.left, env)
        right = _evaluate(node.right, env)
        return _apply(node, left, right)
    raise ExpressionEvaluationError(f"未知的语法树节点 {type(node).__name__}", column=getattr(node, "column", 1))


def _apply(node: BinOp, left: Value, right: Value) -> Value:
    left_is_matrix = isinstance(left, ComplexMatrix)
    right_is_matrix = isinstance(right, ComplexMatrix)
    try:
        if node.op == "*":
            if left_is_matrix and right_is_matrix:
                return left @ right
            if left_is_matrix or right_is_matrix:
                return left * right
            return _finite(left * right, node.column)
        if left_is_matrix != right_is_matrix:
            raise ExpressionEvaluationError("标量与矩阵不能相加减，请写成 c*id(n)", column=node.column)
        result = left + right if node.op == "+" else left - right
        return result if left_is_matrix else _finite(result, node.column)
    except ExpressionEvaluationError:
        raise
    except NHEntropyError as exc:
        # 维数不匹配或结果溢出
        raise ExpressionEvaluationError(str(exc), column=node.column) from exc


def evaluate(node: Node, env: Optional[Mapping[str, complex]] = None) -> ComplexMatrix:
    """
    对语法树求值，结果必须是矩阵。

    Args:
        node: 语法树。
        env: 常量环境 (名称到数值)。

    Raises:
        ExpressionEvaluationError: 未知名称、维数或类型不匹配、结果为标量。
    """
    value = _evaluate(node, env or {})
    if not isinstance(value, ComplexMatrix):
        raise ExpressionEvaluationError("表达式的结果是标量而不是矩阵，请写成 c*id(n)", column=1)
    return value


def evaluate_hermitian(node: Node, env: Optional[Mapping[str, complex]] = None, part: str = "operator") -> ComplexMatrix:
    """
    求值并检查结果是厄米的 (用于 Ĥ、Γ̂ 与初始密度算符槽位)。

    Raises:
        ExpressionEvaluationError: 求值失败或结果不是厄米的。
    """
    value = evaluate(node, env)
    try:
        require_hermitian(value, part)
    except NonHermitianError as exc:
        raise ExpressionEvaluationError(str(exc), column=1) from exc
    return value


def evaluate_text(text: str, env: Optional[Mapping[str, complex]] = None, hermitian_part: Optional[str] = None) -> ComplexMatrix:
    """解析并求值表达式文本；给定 hermitian_part 时检查厄米性。"""
    node = parse_operator_expr(text)
    if hermitian_part is not None:
        return evaluate_hermitian(node, env, hermitian_part)
    return evaluate(node, env)
