# src/nhentropy/plugins/parsers/scenario/exceptions.py

"""
定义场景文件解析器特定的异常类。每个异常都携带 1 起始的行号与列号。
"""
from typing import Optional

from nhentropy.core.exceptions import ParsingError


class ScenarioError(ParsingError):
    """
    场景解析错误的基类。

    Attributes:
        code: 机器可读的错误类别。
        line: 1 起始行号。
        column: 1 起始列号。
        detail: 不带位置前缀的错误描述。
        key: 相关的键名 (如果有)。
    """
    code = "scenario_error"

    def __init__(self, message: str = "场景文件无效。", line: int = 1, column: int = 1, key: Optional[str] = None):
        self.line = line
        self.column = column
        self.detail = message
        self.key = key
        super().__init__(plugin_name="ScenarioParser", message=f"{line}:{column}: {message}")


class ScenarioSyntaxError(ScenarioError):
    """行格式错误、重复的键或节、值无法解析。"""
    code = "syntax_error"


class UnknownKeyError(ScenarioError):
    """未知的键、节或模型名称。"""
    code = "unknown_key"


class MissingKeyError(ScenarioError):
    """缺少必需的键或节。"""
    code = "missing_key"


class RangeViolationError(ScenarioError):
    """值可以解析但超出允许范围。"""
    code = "range_violation"
