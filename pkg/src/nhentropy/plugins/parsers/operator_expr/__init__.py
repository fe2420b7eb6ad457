# src/nhentropy/plugins/parsers/operator_expr/__init__.py
from .evaluator import RESERVED_NAMES, evaluate, evaluate_hermitian, evaluate_text
from .exceptions import ExpressionError, ExpressionEvaluationError, ExpressionLexError, ExpressionParseError
from .nodes import BinOp, Call, Imag, Name, Neg, Node, Number, to_source
from .parser import parse_operator_expr

__all__ = [
    "RESERVED_NAMES",
    "evaluate",
    "evaluate_hermitian",
    "evaluate_text",
    "ExpressionError",
    "ExpressionEvaluationError",
    "ExpressionLexError",
    "ExpressionParseError",
    "BinOp",
    "Call",
    "Imag",
    "Name",
    "Neg",
    "Node",
    "Number",
    "to_source",
    "parse_operator_expr",
]
