# src/nhentropy/plugins/parsers/operator_expr/exceptions.py

"""
定义算符表达式语言特定的异常类。
"""
from nhentropy.core.exceptions import ParsingError


class ExpressionError(ParsingError):
    """
    算符表达式错误的基类。

    Attributes:
        code: 机器可读的错误类别。
        line: 1 起始行号 (单独解析表达式时为 1)。
        column: 1 起始列号。
        detail: 不带位置前缀的错误描述。
    """
    code = "expression_error"

    def __init__(self, message: str = "算符表达式无效。", line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.detail = message
        super().__init__(plugin_name="OperatorExpr", message=f"{line}:{column}: {message}")

    def at(self, line: int, column_offset: int) -> "ExpressionError":
        """把表达式内的位置平移到所在文件中的位置，返回同类型的新异常。"""
        return type(self)(self.detail, line=line, column=self.column + column_offset)


class ExpressionLexError(ExpressionError):
    """遇到无法识别的字符。"""
    code = "expression_lex_error"


class ExpressionParseError(ExpressionError):
    """记号序列不符合语法。"""
    code = "expression_parse_error"


class ExpressionEvaluationError(ExpressionError):
    """求值失败: 未知名称、维数不匹配、类型不匹配或要求厄米的槽位得到非厄米结果。"""
    code = "expression_evaluation_error"
