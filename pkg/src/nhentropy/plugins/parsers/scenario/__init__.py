# src/nhentropy/plugins/parsers/scenario/__init__.py
from .config import ScenarioParserSettings
from .exceptions import MissingKeyError, RangeViolationError, ScenarioError, ScenarioSyntaxError, UnknownKeyError
from .parser import ScenarioParser, parse_scenario

__all__ = [
    "ScenarioParserSettings",
    "MissingKeyError",
    "RangeViolationError",
    "ScenarioError",
    "ScenarioSyntaxError",
    "UnknownKeyError",
    "ScenarioParser",
    "parse_scenario",
]
