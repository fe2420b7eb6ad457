# tests/plugins/parsers/test_scenario_parser.py
import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nhentropy.core.algebra import Axis, pauli
from nhentropy.core.exceptions import ParsingError
from nhentropy.core.scenario.models import FigureId, Scenario
from nhentropy.plugins.models.two_level import TwoLevelParams
from nhentropy.plugins.parsers.operator_expr import ExpressionEvaluationError, ExpressionLexError, ExpressionParseError
from nhentropy.plugins.parsers.scenario import (
    MissingKeyError,
    RangeViolationError,
    ScenarioParser,
    ScenarioSyntaxError,
    UnknownKeyError,
    parse_scenario,
)
from tests.helpers import two_level_text

CUSTOM = """\
[model custom]
const w = 0.5
H = -delta*sx + w*sz
Gamma = {gamma_op}
delta = 1
gamma = 2
p = 0.5

[run]
t_max = 1
samples = 2
"""


def custom_text(gamma_op: str = "gamma*sz + mu*delta*id(2)", h: str = "-delta*sx + w*sz") -> str:
    return CUSTOM.format(gamma_op=gamma_op).replace("-delta*sx + w*sz", h)


class TestValidScenarios:
    def test_two_level(self):
        scenario = parse_scenario(two_level_text(), source="x.scn")
        assert scenario.model == "two_level"
        assert scenario.params == TwoLevelParams(delta=1.0, gamma=2.0, p=0.25, k=0.0)
        assert (scenario.t_max, scenario.samples, scenario.integrator) == (4.0, 41, "exact")
        assert scenario.substeps is None
        assert scenario.outputs.csv == "run.csv"
        assert scenario.outputs.figure is None
        assert scenario.source == "x.scn"

    def test_substeps(self):
        scenario = parse_scenario(two_level_text(integrator="rk4", extra="substeps = 1000"))
        assert scenario.substeps == 1000

    def test_defaults_comments_and_indentation(self):
        text = (
            "   # leading comment\n"
            "[model two_level]   # trailing comment\n"
            "    delta = 1\n"
            "\tgamma=2\n"
            "p = 0.5 # excited weight\n"
            "\n"
            "[ run ]\n"
            "t_max = 2\n"
            "samples = 3\n"
        )
        scenario = parse_scenario(text)
        assert scenario.integrator == "rk4"
        assert scenario.outputs.csv is None
        assert scenario.params.gamma == 2.0

    def test_custom_model_with_constant(self):
        scenario = parse_scenario(custom_text())
        assert scenario.constants == {"w": 0.5}
        assert scenario.params.ham.h == -1.0 * pauli(Axis.X) + 0.5 * pauli(Axis.Z)
        assert scenario.params.delta == 1.0

    def test_figure_output(self):
        scenario = parse_scenario(two_level_text() + "figure = fig4\n")
        assert scenario.outputs.figure is FigureId.FIG4

    def test_with_updates(self):
        scenario = parse_scenario(two_level_text())
        assert scenario.with_updates(samples=5).samples == 5
        assert scenario.samples == 41


def _error(text: str):
    with pytest.raises(ParsingError) as excinfo:
        parse_scenario(text)
    return excinfo.value


class TestErrors:
    def test_unknown_model_points_at_name(self):
        error = _error("[model nope]\nx = 1\n[run]\nt_max = 1\nsamples = 2\n")
        assert isinstance(error, UnknownKeyError)
        assert (error.line, error.column) == (1, 8)
        assert error.code == "unknown_key"

    # 一个场景只有一个 [output] 节，其中 csv 与 figure 各至多一个
    @pytest.mark.parametrize("second", ["csv = b.csv", "[output]"])
    def test_single_output_block(self, second):
        text = (
            "[model two_level]\ndelta = 1\ngamma = 2\np = 0.5\n"
            "[run]\nt_max = 1\nsamples = 2\n"
            f"[output]\ncsv = a.csv\n{second}\n"
        )
        error = _error(text)
        assert isinstance(error, ScenarioSyntaxError)
        assert (error.line, error.column) == (10, 1)

    def test_probability_out_of_range(self):
        error = _error(two_level_text(p=1.5))
        assert isinstance(error, RangeViolationError)
        assert (error.line, error.column, error.key) == (5, 5, "p")
        assert error.code == "range_violation"

    def test_expression_error_position_in_file(self):
        error = _error(custom_text(h="sx + $"))
        assert isinstance(error, ExpressionLexError)
        assert (error.line, error.column) == (3, 10)

    def test_expression_parse_error_position(self):
        error = _error(custom_text(gamma_op="sz *"))
        assert isinstance(error, ExpressionParseError)
        assert (error.line, error.column) == (4, 13)

    def test_unknown_name_in_expression(self):
        error = _error(custom_text(gamma_op="0.5*sz + eta*id(2)"))
        assert isinstance(error, ExpressionEvaluationError)
        assert (error.line, error.column) == (4, 18)

    @pytest.mark.parametrize("text, cls, line, column, key", [
        (two_level_text(extra="foo = 1"), UnknownKeyError, 12, 1, "foo"),
        (two_level_text().replace("t_max = 4.0\n", ""), MissingKeyError, 8, 1, "t_max"),
        (two_level_text().replace("p = 0.25\n", ""), MissingKeyError, 2, 1, "p"),
        (two_level_text(extra="samples = 3"), ScenarioSyntaxError, 12, 1, None),
        (two_level_text(samples=1), RangeViolationError, 10, 11, "samples"),
        (two_level_text(t_max=-1.0), RangeViolationError, 9, 9, "t_max"),
        (two_level_text(integrator="euler"), RangeViolationError, 11, 14, "integrator"),
        (two_level_text(extra="substeps = 0"), RangeViolationError, 12, 12, "substeps"),
        (two_level_text(extra="substeps = many"), ScenarioSyntaxError, 12, 12, "substeps"),
        (two_level_text(gamma="abc"), ScenarioSyntaxError, 4, 9, "gamma"),
        (two_level_text(gamma=0.5, k=1.0), RangeViolationError, 6, 5, "k"),
        (two_level_text() + "figure = fig9\n", RangeViolationError, 15, 10, "figure"),
        (two_level_text() + "const c = 1\n", UnknownKeyError, 15, 1, "c"),
    ])
    def test_error_positions(self, text, cls, line, column, key):
        error = _error(text)
        assert type(error) is cls
        assert (error.line, error.column) == (line, column)
        if key is not None:
            assert error.key == key

    @pytest.mark.parametrize("text, cls, line", [
        ("delta = 1\n", ScenarioSyntaxError, 1),
        ("[model]\n", ScenarioSyntaxError, 1),
        ("[run fast]\n", ScenarioSyntaxError, 1),
        ("[plot]\n", UnknownKeyError, 1),
        ("[model two_level\n", ScenarioSyntaxError, 1),
        ("[run]\nt_max\n", ScenarioSyntaxError, 2),
        ("[run]\nt max = 1\n", ScenarioSyntaxError, 2),
        ("[run]\n[run]\n", ScenarioSyntaxError, 2),
        ("[model two_level]\ndelta = 1\n", MissingKeyError, 2),
        ("", MissingKeyError, 1),
    ])
    def test_structure_errors(self, text, cls, line):
        error = _error(text)
        assert type(error) is cls
        assert error.line == line

    def test_missing_value_column(self):
        error = _error("[run]\nt_max =\n")
        assert isinstance(error, ScenarioSyntaxError)
        assert (error.line, error.column) == (2, 8)

    def test_reserved_constant(self):
        error = _error(custom_text().replace("const w = 0.5", "const mu = 0.5"))
        assert isinstance(error, ScenarioSyntaxError)
        assert (error.line, error.column, error.key) == (2, 1, "mu")

    def test_constant_must_be_real(self):
        error = _error(custom_text().replace("const w = 0.5", "const w = sx"))
        assert isinstance(error, ScenarioSyntaxError)
        assert (error.line, error.column) == (2, 11)

    def test_line_length_limit(self):
        with pytest.raises(ScenarioSyntaxError) as excinfo:
            parse_scenario("# " + "x" * 40 + "\n", max_line_length=20)
        assert excinfo.value.column == 21

    def test_const_gamma_hamiltonian_dimension(self):
        error = _error("[model const_gamma]\ngamma0 = 1\nH = id(3)\n[run]\nt_max = 1\nsamples = 2\n")
        assert isinstance(error, RangeViolationError)
        assert (error.line, error.column, error.key) == (3, 5, "H")


class TestScenarioParserPlugin:
    def test_parse_file(self, write_scenario):
        path = write_scenario(two_level_text())
        scenario = ScenarioParser().parse(path)
        assert scenario.source == str(path)
        assert scenario.model == "two_level"

    def test_parse_stream(self):
        scenario = ScenarioParser().parse(io.StringIO(two_level_text()))
        assert isinstance(scenario, Scenario)

    def test_unsupported_source(self):
        with pytest.raises(TypeError):
            ScenarioParser().parse(42)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ScenarioParser().parse(tmp_path / "absent.scn")

    def test_configuration(self, monkeypatch):
        monkeypatch.setenv("NHENTROPY_PLUGIN_SCENARIO_MAX_LINE_LENGTH", "10")
        parser = ScenarioParser()
        assert parser.settings.max_line_length == 10
        with pytest.raises(ScenarioSyntaxError):
            parser.parse_text(two_level_text())
        assert ScenarioParser({"file_extensions": ["scn"]}).supported_types == ["scn"]

    def test_custom_resolver(self):
        seen = []

        def resolver(name):
            from nhentropy.plugins.models import BUILTIN_MODELS
            seen.append(name)
            return BUILTIN_MODELS[name]()

        ScenarioParser(model_resolver=resolver).parse_text(two_level_text())
        assert seen == ["two_level"]


_LINES = st.one_of(
    st.sampled_from([
        "[model two_level]", "[model custom]", "[model const_gamma]", "[run]", "[output]",
        "delta = 1", "gamma = 2", "gamma = 0.5", "p = 0.5", "p = 2", "k = 1", "gamma0 = 1",
        "H = sx", "H = -delta*sx", "Gamma = gamma*sz + mu*id(2)", "rho0 = 0.5*id(2)", "const c = 2",
        "t_max = 1", "samples = 3", "integrator = exact", "substeps = 10", "csv = a.csv", "figure = fig1",
        "# comment", "",
    ]),
    st.text(max_size=30),
)


@given(st.lists(_LINES, max_size=14))
@settings(max_examples=300, deadline=None)
def test_parser_is_total(lines):
    try:
        scenario = parse_scenario("\n".join(lines))
    except ParsingError:
        return
    assert isinstance(scenario, Scenario)
