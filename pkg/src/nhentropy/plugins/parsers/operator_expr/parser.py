# src/nhentropy/plugins/parsers/operator_expr/parser.py

"""
算符表达式的递归下降语法分析。

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | number | imag | "i" | ident | ident "(" number ")" | "(" expr ")"
"""
from typing import List

from nhentropy.plugins.parsers.operator_expr.exceptions import ExpressionParseError
from nhentropy.plugins.parsers.operator_expr.lexer import Token, tokenize
from nhentropy.plugins.parsers.operator_expr.nodes import BinOp, Call, Imag, Name, Neg, Node, Number

# 括号与一元负号的最大嵌套深度
MAX_DEPTH = 100
# 二元运算符的最大个数 (限制语法树深度)
MAX_OPERATORS = 300


class _Parser:
    def __init__(self, tokens: List[Token]):
        self._tokens = tokens
        self._index = 0
        self._depth = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        if token.kind != "end":
            self._index += 1
        return token

    def _expect(self, kind: str, what: str) -> Token:
        token = self._current
        if token.kind != kind:
            found = token.text or "输入结尾"
            raise ExpressionParseError(f"期望 {what}，得到 {found!r}", column=token.column)
        return self._advance()

    def _enter(self, column: int) -> None:
        self._depth += 1
        if self._depth > MAX_DEPTH:
            raise ExpressionParseError(f"嵌套深度超过 {MAX_DEPTH}", column=column)

    def parse(self) -> Node:
        node = self._expr()
        if self._current.kind != "end":
            raise ExpressionParseError(f"多余的记号 {self._current.text!r}", column=self._current.column)
        return node

    def _expr(self) -> Node:
        node = self._term()
        while self._current.kind == "op" and self._current.text in "+-":
            op = self._advance()
            node = BinOp(op.text, node, self._term(), column=op.column)
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._current.kind == "op" and self._current.text == "*":
            op = self._advance()
            node = BinOp("*", node, self._factor(), column=op.column)
        return node

    def _factor(self) -> Node:
        token = self._current
        if token.kind == "op" and token.text == "-":
            self._advance()
            self._enter(token.column)
            operand = self._factor()
            self._depth -= 1
            return Neg(operand, column=token.column)
        if token.kind == "number":
            self._advance()
            return Number(float(token.text), column=token.column)
        if token.kind == "imag":
            self._advance()
            return Imag(float(token.text), column=token.column)
        if token.kind == "ident":
            self._advance()
            if token.text == "i":
                return Imag(1.0, column=token.column)
            if self._current.kind == "lparen":
                self._advance()
                arg = self._expect("number", "数值参数")
                self._expect("rparen", "')'")
                return Call(token.text, float(arg.text), column=token.column)
            return Name(token.text, column=token.column)
        if token.kind == "lparen":
            self._advance()
            self._enter(token.column)
            node = self._expr()
            self._depth -= 1
            self._expect("rparen", "')'")
            return node
        found = token.text or "输入结尾"
        raise ExpressionParseError(f"期望操作数，得到 {found!r}", column=token.column)


def parse_operator_expr(text: str) -> Node:
    """
    解析算符表达式文本。

    Args:
        text: 表达式，例如 ``"gamma*sz + mu*delta*id(2)"``。

    Returns:
        Node: 语法树根节点。

    Raises:
        ExpressionLexError: 词法错误。
        ExpressionParseError: 语法错误 (包括嵌套过深)。
    """
    tokens = tokenize(text)
    operators = [token for token in tokens if token.kind == "op"]
    if len(operators) > MAX_OPERATORS:
        raise ExpressionParseError(f"运算符超过 {MAX_OPERATORS} 个", column=operators[MAX_OPERATORS].column)
    return _Parser(tokens).parse()
