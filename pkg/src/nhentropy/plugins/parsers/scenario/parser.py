# src/nhentropy/plugins/parsers/scenario/parser.py

"""
场景文件解析器。

文件由若干节组成，每节是 ``key = value`` 行，``#`` 之后为注释::

    [model two_level]
    delta = 1
    gamma = 2
    p = 0.5

    [run]
    t_max = 4
    samples = 401

    [output]
    csv = two_level.csv

模型参数原样交给模型插件的 coerce() 校验；插件报告的参数错误在这里映射回文件中的行列位置。
"""
import logging
import math
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from nhentropy.core.exceptions import ModelParameterError, NHEntropyError, ParsingError, PluginNotFoundError
from nhentropy.core.interfaces.base_model_provider import BaseModelProvider
from nhentropy.core.interfaces.base_parser import BaseParser
from nhentropy.core.scenario.models import FigureId, OutputSpec, Scenario
from nhentropy.plugins.parsers.operator_expr import (
    RESERVED_NAMES,
    ExpressionError,
    ExpressionEvaluationError,
    ExpressionLexError,
    ExpressionParseError,
)
from nhentropy.plugins.parsers.scenario.config import ScenarioParserSettings
from nhentropy.plugins.parsers.scenario.exceptions import (
    MissingKeyError,
    RangeViolationError,
    ScenarioError,
    ScenarioSyntaxError,
    UnknownKeyError,
)

logger = logging.getLogger(__name__)

ModelResolver = Callable[[str], BaseModelProvider]

SECTION_KINDS = ("model", "run", "output")
RUN_KEYS = frozenset({"t_max", "samples", "integrator", "substeps"})
OUTPUT_KEYS = frozenset({"csv", "figure"})
INTEGRATORS = ("rk4", "exact")
# 用户常量不能覆盖的名字 (生成元、函数以及 delta/gamma 派生量)
CONSTANT_RESERVED = RESERVED_NAMES | {"delta", "gamma", "mu"}

_SECTION_RE = re.compile(r"\[\s*([A-Za-z_][A-Za-z0-9_]*)(?:\s+([A-Za-z_][A-Za-z0-9_]*))?\s*\]$", re.ASCII)
_KEY_RE = re.compile(r"(?:(const)\s+)?([A-Za-z_][A-Za-z0-9_]*)$", re.ASCII)

_EXPRESSION_ERRORS = {cls.code: cls for cls in (ExpressionLexError, ExpressionParseError, ExpressionEvaluationError)}


@dataclass(frozen=True)
class _Entry:
    key: str
    value: str
    line: int
    key_column: int
    value_column: int


@dataclass
class _Section:
    kind: str
    name: Optional[str]
    line: int
    column: int
    name_column: int
    entries: Dict[str, _Entry] = field(default_factory=dict)
    constants: Dict[str, _Entry] = field(default_factory=dict)


def _builtin_resolver(name: str) -> BaseModelProvider:
    from nhentropy.plugins.models import BUILTIN_MODELS

    if name not in BUILTIN_MODELS:
        raise PluginNotFoundError("models", name)
    return BUILTIN_MODELS[name]()


def _split_sections(text: str, max_line_length: int) -> Dict[str, _Section]:
    sections: Dict[str, _Section] = {}
    current: Optional[_Section] = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        if len(raw_line) > max_line_length:
            raise ScenarioSyntaxError(f"行长度超过 {max_line_length} 个字符", lineno, max_line_length + 1)
        content = raw_line.split("#", 1)[0].rstrip()
        stripped = content.strip()
        if not stripped:
            continue
        column = len(content) - len(content.lstrip()) + 1

        if stripped.startswith("["):
            match = _SECTION_RE.match(stripped)
            if not match:
                raise ScenarioSyntaxError("节头格式应为 [model <名称>]、[run] 或 [output]", lineno, column)
            kind, name = match.groups()
            if kind not in SECTION_KINDS:
                raise UnknownKeyError(f"未知的节 '{kind}'", lineno, column, key=kind)
            if kind == "model" and name is None:
                raise ScenarioSyntaxError("[model] 节需要模型名称，例如 [model two_level]", lineno, column)
            if kind != "model" and name is not None:
                raise ScenarioSyntaxError(f"[{kind}] 节不接受名称", lineno, column)
            if kind in sections:
                raise ScenarioSyntaxError(f"重复的 [{kind}] 节 (第 {sections[kind].line} 行已定义)", lineno, column)
            name_column = column + match.start(2) if name else column
            current = _Section(kind=kind, name=name, line=lineno, column=column, name_column=name_column)
            sections[kind] = current
            continue

        if current is None:
            raise ScenarioSyntaxError("键值对出现在任何节之前", lineno, column)
        if "=" not in content:
            raise ScenarioSyntaxError("期望 'key = value'", lineno, column)
        eq = content.index("=")
        key_text = content[:eq].strip()
        value_raw = content[eq + 1:]
        value = value_raw.strip()
        match = _KEY_RE.match(key_text)
        if not match:
            raise ScenarioSyntaxError(f"无效的键 {key_text!r}", lineno, column)
        if not value:
            raise ScenarioSyntaxError("缺少值", lineno, eq + 2)
        is_const, key = match.groups()
        entry = _Entry(
            key=key,
            value=value,
            line=lineno,
            key_column=column,
            value_column=eq + 2 + len(value_raw) - len(value_raw.lstrip()),
        )
        if is_const:
            if current.kind != "model":
                raise UnknownKeyError("const 只能出现在 [model] 节中", lineno, column, key=key)
            target = current.constants
        else:
            target = current.entries
        if key in target:
            raise ScenarioSyntaxError(f"重复的键 '{key}' (第 {target[key].line} 行已定义)", lineno, column)
        target[key] = entry
    return sections


def _real_value(entry: _Entry) -> float:
    try:
        value = float(entry.value)
    except ValueError as exc:
        raise ScenarioSyntaxError(f"'{entry.key}' 不是实数: {entry.value!r}", entry.line, entry.value_column, key=entry.key) from exc
    if not math.isfinite(value):
        raise RangeViolationError(f"'{entry.key}' 必须是有限实数", entry.line, entry.value_column, key=entry.key)
    return value


def _int_value(entry: _Entry) -> int:
    try:
        return int(entry.value)
    except ValueError as exc:
        raise ScenarioSyntaxError(f"'{entry.key}' 不是整数: {entry.value!r}", entry.line, entry.value_column, key=entry.key) from exc


def _require(section: _Section, key: str) -> _Entry:
    if key not in section.entries:
        raise MissingKeyError(f"[{section.kind}] 节缺少 '{key}'", section.line, section.column, key=key)
    return section.entries[key]


def _reject_unknown(section: _Section, allowed: frozenset, owner: str) -> None:
    for entry in section.entries.values():
        if entry.key not in allowed:
            raise UnknownKeyError(
                f"{owner} 不接受键 '{entry.key}' (允许: {', '.join(sorted(allowed))})",
                entry.line, entry.key_column, key=entry.key,
            )


def _map_parameter_error(exc: ModelParameterError, section: _Section) -> ParsingError:
    entry = section.entries.get(exc.key) or section.constants.get(exc.key)
    line, column = (entry.line, entry.value_column) if entry else (section.line, section.column)
    if entry is not None and exc.reason_code in _EXPRESSION_ERRORS:
        cls = _EXPRESSION_ERRORS[exc.reason_code]
        return cls(f"{exc.key}: {exc.reason}", line=line, column=column + (exc.offset or 1) - 1)
    if exc.reason_code == "missing":
        return MissingKeyError(f"模型 '{section.name}' 缺少 '{exc.key}'", line, column, key=exc.key)
    if exc.reason_code == "invalid_value":
        return ScenarioSyntaxError(f"{exc.key}: {exc.reason}", line, column, key=exc.key)
    return RangeViolationError(f"{exc.key}: {exc.reason}", line, column, key=exc.key)


def _parse_model(section: _Section, resolver: ModelResolver) -> tuple:
    try:
        provider = resolver(section.name)
    except PluginNotFoundError as exc:
        raise UnknownKeyError(f"未知模型 '{section.name}'", section.line, section.name_column, key=section.name) from exc
    _reject_unknown(section, provider.allowed_keys, f"模型 '{section.name}'")

    constants: Dict[str, float] = {}
    for name, entry in section.constants.items():
        if name in CONSTANT_RESERVED:
            raise ScenarioSyntaxError(f"常量名 '{name}' 是保留名字", entry.line, entry.key_column, key=name)
        constants[name] = _real_value(entry)

    raw = {key: entry.value for key, entry in section.entries.items()}
    try:
        params = provider.coerce(raw, constants)
    except ModelParameterError as exc:
        raise _map_parameter_error(exc, section) from exc
    except NHEntropyError as exc:
        raise RangeViolationError(f"模型 '{section.name}' 参数无效: {exc}", section.line, section.column) from exc
    return params, constants


def _parse_run(section: _Section) -> Dict[str, Any]:
    _reject_unknown(section, RUN_KEYS, "[run] 节")
    entry = _require(section, "t_max")
    t_max = _real_value(entry)
    if t_max <= 0.0:
        raise RangeViolationError(f"t_max 必须为正，得到 {t_max}", entry.line, entry.value_column, key="t_max")

    entry = _require(section, "samples")
    samples = _int_value(entry)
    if samples < 2:
        raise RangeViolationError(f"samples 必须 >= 2，得到 {samples}", entry.line, entry.value_column, key="samples")

    integrator = "rk4"
    if "integrator" in section.entries:
        entry = section.entries["integrator"]
        if entry.value not in INTEGRATORS:
            raise RangeViolationError(
                f"integrator 必须是 {' | '.join(INTEGRATORS)}，得到 {entry.value!r}",
                entry.line, entry.value_column, key="integrator",
            )
        integrator = entry.value

    substeps = None
    if "substeps" in section.entries:
        entry = section.entries["substeps"]
        substeps = _int_value(entry)
        if substeps <= 0:
            raise RangeViolationError(f"substeps 必须为正，得到 {substeps}", entry.line, entry.value_column, key="substeps")
    return {"t_max": t_max, "samples": samples, "integrator": integrator, "substeps": substeps}


def _parse_output(section: Optional[_Section]) -> OutputSpec:
    if section is None:
        return OutputSpec()
    _reject_unknown(section, OUTPUT_KEYS, "[output] 节")
    figure = None
    if "figure" in section.entries:
        entry = section.entries["figure"]
        try:
            figure = FigureId(entry.value)
        except ValueError as exc:
            allowed = ", ".join(item.value for item in FigureId)
            raise RangeViolationError(
                f"figure 必须是 {allowed} 之一，得到 {entry.value!r}", entry.line, entry.value_column, key="figure"
            ) from exc
    csv_entry = section.entries.get("csv")
    return OutputSpec(csv=csv_entry.value if csv_entry else None, figure=figure)


def parse_scenario(
    text: str,
    source: Optional[str] = None,
    model_resolver: Optional[ModelResolver] = None,
    max_line_length: int = 10000,
) -> Scenario:
    """
    解析场景文本。

    Args:
        text: 场景文件内容。
        source: 来源描述 (文件路径)，写入 Scenario.source。
        model_resolver: 按名称返回模型插件实例；默认使用内置模型。
        max_line_length: 单行最大字符数。

    Returns:
        Scenario: 校验后的场景。

    Raises:
        ScenarioSyntaxError: 格式错误、重复的键或节、值无法解析。
        UnknownKeyError: 未知的键、节或模型。
        MissingKeyError: 缺少必需的键或节。
        RangeViolationError: 值超出允许范围。
        ExpressionError: 算符表达式错误 (位置为文件中的行列)。
    """
    resolver = model_resolver or _builtin_resolver
    sections = _split_sections(text, max_line_length)
    last_line = max(1, len(text.splitlines()))

    if "model" not in sections:
        raise MissingKeyError("缺少 [model <名称>] 节", last_line, 1, key="model")
    if "run" not in sections:
        raise MissingKeyError("缺少 [run] 节", last_line, 1, key="run")

    model_section = sections["model"]
    params, constants = _parse_model(model_section, resolver)
    run = _parse_run(sections["run"])
    outputs = _parse_output(sections.get("output"))

    scenario = Scenario(model=model_section.name, params=params, constants=constants, outputs=outputs, source=source, **run)
    logger.info(
        f"场景解析完成: 模型 {scenario.model}, t_max={scenario.t_max}, samples={scenario.samples}, "
        f"积分器 {scenario.integrator} (来源 {source or '<text>'})"
    )
    return scenario


class ScenarioParser(BaseParser):
    """
    场景文件解析器插件。插件管理器会把 model_resolver 设置为自己的 get_model，
    使第三方模型插件也能在场景文件中使用。
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, model_resolver: Optional[ModelResolver] = None):
        super().__init__(config)
        self.settings = ScenarioParserSettings(**(config or {}))
        self.model_resolver = model_resolver

    @property
    def supported_types(self) -> List[str]:
        return list(self.settings.file_extensions)

    def parse_text(self, text: str, source: Optional[str] = None, **kwargs) -> Scenario:
        try:
            return parse_scenario(
                text,
                source=source,
                model_resolver=self.model_resolver,
                max_line_length=self.settings.max_line_length,
            )
        except (ScenarioError, ExpressionError) as exc:
            logger.error(f"解析场景 '{source or '<text>'}' 失败: {exc}")
            raise
