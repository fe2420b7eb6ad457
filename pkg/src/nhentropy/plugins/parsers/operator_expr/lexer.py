# src/nhentropy/plugins/parsers/operator_expr/lexer.py

"""
算符表达式的词法分析。
"""
import re
from dataclasses import dataclass
from typing import List, Literal

from nhentropy.plugins.parsers.operator_expr.exceptions import ExpressionLexError

TokenKind = Literal["number", "imag", "ident", "op", "lparen", "rparen", "end"]

_NUMBER = r"(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?"
_TOKEN_RE = re.compile(
    rf"(?P<ws>\s+)"
    rf"|(?P<imag>{_NUMBER}i(?![A-Za-z0-9_]))"
    rf"|(?P<number>{_NUMBER})"
    rf"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    rf"|(?P<op>[+\-*])"
    rf"|(?P<lparen>\()"
    rf"|(?P<rparen>\))",
    re.ASCII,
)


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    column: int  # 1 起始


def tokenize(text: str) -> List[Token]:
    """
    把表达式文本切分为记号序列，末尾附加 end 记号。

    Raises:
        ExpressionLexError: 遇到无法识别的字符。
    """
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ExpressionLexError(f"无法识别的字符 {text[position]!r}", column=position + 1)
        kind = match.lastgroup
        if kind != "ws":
            value = match.group()
            if kind == "imag":
                value = value[:-1]
            tokens.append(Token(kind=kind, text=value, column=position + 1))
        position = match.end()
    tokens.append(Token(kind="end", text="", column=len(text) + 1))
    return tokens
