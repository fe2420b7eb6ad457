# tests/core/workflows/test_comparison.py
import math

import numpy as np
import pytest

from nhentropy.core.exceptions import NumericalBoundError, WorkflowError
from nhentropy.core.workflows import ComparisonWorkflow, SimulationWorkflow, gauge_difference
from nhentropy.plugins.parsers.scenario import parse_scenario
from tests.helpers import two_level_text

MU = math.sqrt(3.0)

GAUGE_SCENARIO = """\
[model custom]
const a = {a!r}
H = -delta*sx
Gamma = gamma*sz + a*id(2)
delta = 1
gamma = 2
p = 0.25

[run]
t_max = 4
samples = 41
integrator = exact
"""


@pytest.fixture
def workflow(manager):
    return ComparisonWorkflow(manager)


@pytest.mark.parametrize("p", [0.01, 0.25, 0.99])
def test_exact_propagation_meets_bound(workflow, p):
    report = workflow.check(parse_scenario(two_level_text(p=p)))
    assert not report.skipped
    assert report.passed
    assert set(report.deviations) == {"omega", "log_trace", "s_vn", "s_nh"}
    assert "F1_vs_F2_max_rel" in report.diagnostics
    assert "通过" in report.render()


def test_rk4_with_fine_substeps_meets_bound(workflow):
    report = workflow.check(parse_scenario(two_level_text(integrator="rk4", extra="substeps = 1000")))
    assert report.passed
    assert report.deviations["s_nh"].max_abs < 1e-8


@pytest.mark.parametrize("gamma", [-2.0, 2.0])
@pytest.mark.parametrize("k", [1.0, 1.5])
def test_gauge_multipliers_meet_bound(workflow, gamma, k):
    assert workflow.run(parse_scenario(two_level_text(gamma=gamma, k=k))).passed


def test_const_gamma_meets_bound(workflow):
    text = "[model const_gamma]\ngamma0 = 1\nH = 0.3*sx\np = 0.2\n[run]\nt_max = 10\nsamples = 21\nintegrator = rk4\n"
    report = workflow.check(parse_scenario(text))
    assert report.deviations["log_trace"].max_abs < 1e-8


def test_coarse_integration_fails_tight_bound(manager):
    scenario = parse_scenario(two_level_text(t_max=0.5, samples=6, integrator="rk4", extra="substeps = 1"))
    workflow = ComparisonWorkflow(manager, bound=1e-12)
    report = workflow.run(scenario)
    assert not report.passed
    assert "失败" in report.render()
    with pytest.raises(NumericalBoundError):
        workflow.check(scenario)


def test_outside_closed_form_domain_is_skipped(workflow):
    report = workflow.check(parse_scenario(two_level_text(gamma=0.5)))
    assert report.skipped
    assert "outside closed-form domain" in report.notice
    assert report.deviations == {}
    assert "跳过" in report.render()


def test_model_without_closed_form_is_skipped(workflow):
    report = workflow.run(parse_scenario(GAUGE_SCENARIO.format(a=0.0)))
    assert report.skipped


def test_gauge_run_at_critical_multiplier(workflow):
    base = parse_scenario(two_level_text(k=0.0))
    shifted = parse_scenario(two_level_text(k=1.0))
    frame = workflow.gauge_run(base, shifted)
    assert list(frame.columns) == ["t", "tau", "s_vn_diff", "s_nh_diff", "log_trace_diff"]
    np.testing.assert_allclose(frame["s_vn_diff"], 0.0, atol=1e-9)
    np.testing.assert_allclose(frame["s_nh_diff"], 2.0 * MU * frame["t"], atol=1e-8)
    np.testing.assert_allclose(frame["log_trace_diff"], -2.0 * MU * frame["t"], atol=1e-8)


@pytest.mark.parametrize("alpha", [-1.0, 0.5, 2.0 * MU, 3.0 * MU])
def test_gauge_shift_changes_only_the_offset(manager, alpha):
    simulation = SimulationWorkflow(manager)
    base = simulation.simulate(parse_scenario(GAUGE_SCENARIO.format(a=0.0)))
    shifted = simulation.simulate(parse_scenario(GAUGE_SCENARIO.format(a=alpha / 2.0)))
    for a, b in zip(base, shifted):
        assert np.max(np.abs(a.rho.data - b.rho.data)) < 1e-9
    frame = gauge_difference(base, shifted)
    np.testing.assert_allclose(frame["s_nh_diff"], alpha * frame["t"], atol=1e-8)


def test_gauge_difference_requires_same_grid(manager):
    simulation = SimulationWorkflow(manager)
    base = simulation.simulate(parse_scenario(two_level_text()))
    other = simulation.simulate(parse_scenario(two_level_text(samples=11)))
    with pytest.raises(WorkflowError):
        gauge_difference(base, other)
