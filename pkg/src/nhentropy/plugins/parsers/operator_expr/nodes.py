# src/nhentropy/plugins/parsers/operator_expr/nodes.py

"""
算符表达式的抽象语法树与打印器。

节点相等只比较结构，不比较源码位置，因此 parse(to_source(ast)) == ast。
"""
from dataclasses import dataclass, field
from typing import Literal, Union


@dataclass(frozen=True)
class Number:
    """非负实数字面量。"""
    value: float
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Imag:
    """虚数字面量 value·i；单独的 ``i`` 即 Imag(1.0)。"""
    value: float
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Name:
    """命名常量 (delta, gamma, mu, 用户常量) 或生成元 (sx, sy, sz)。"""
    ident: str
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Call:
    """带数值参数的生成元，目前只有 id(n)。"""
    func: str
    arg: float
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: Literal["+", "-", "*"]
    left: "Node"
    right: "Node"
    column: int = field(default=1, compare=False)


Node = Union[Number, Imag, Name, Call, Neg, BinOp]


def _format_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))


def to_source(node: Node) -> str:
    """把语法树打印为可重新解析的表达式文本 (只在必要处加括号)。"""
    if isinstance(node, Number):
        return _format_number(node.value)
    if isinstance(node, Imag):
        return "i" if node.value == 1.0 else f"{_format_number(node.value)}i"
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Call):
        return f"{node.func}({_format_number(node.arg)})"
    if isinstance(node, Neg):
        inner = to_source(node.operand)
        if isinstance(node.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, BinOp):
        left = to_source(node.left)
        right = to_source(node.right)
        if node.op == "*":
            if isinstance(node.left, BinOp) and node.left.op != "*":
                left = f"({left})"
            if isinstance(node.right, BinOp):
                right = f"({right})"
            return f"{left}*{right}"
        # 加减法左结合: 右操作数若也是加减法必须加括号
        if isinstance(node.right, BinOp) and node.right.op != "*":
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"未知的语法树节点: {type(node).__name__}")
