# tests/core/workflows/test_scan.py
import math

import pandas as pd
import pytest

from nhentropy.core.exceptions import ClosedFormDomainError, WorkflowError
from nhentropy.core.workflows import ScanWorkflow
from nhentropy.plugins.parsers.scenario import parse_scenario
from tests.helpers import two_level_text

MU = math.sqrt(3.0)


@pytest.fixture
def workflow(manager):
    return ScanWorkflow(manager)


def test_scan_frame(workflow, tmp_path):
    frame = workflow.run(parse_scenario(two_level_text()), [0.0, 1.0, 1.5], csv_path=tmp_path / "scan.csv")
    assert list(frame.columns) == ["k", "slope"]
    assert list(frame["k"]) == [0.0, 1.0, 1.5]
    assert frame["slope"].iloc[0] == pytest.approx(-2.0 * MU, rel=0.02)
    assert abs(frame["slope"].iloc[1]) < 0.01 * MU
    assert frame["slope"].iloc[2] == pytest.approx(MU, rel=0.02)
    pd.testing.assert_frame_equal(pd.read_csv(tmp_path / "scan.csv"), frame)


def test_parallel_scan_matches_serial(workflow):
    scenario = parse_scenario(two_level_text(gamma=-2.0, p=0.75))
    serial = workflow.run(scenario, [0.0, 0.5, 1.0, 2.0], method="numeric")
    parallel = workflow.run(scenario, [0.0, 0.5, 1.0, 2.0], method="numeric", workers=4)
    pd.testing.assert_frame_equal(serial, parallel)


def test_empty_k_list(workflow):
    with pytest.raises(WorkflowError):
        workflow.run(parse_scenario(two_level_text()), [])


def test_model_without_gauge_multiplier(workflow):
    scenario = parse_scenario("[model const_gamma]\ngamma0 = 1\n[run]\nt_max = 1\nsamples = 2\n")
    with pytest.raises(WorkflowError):
        workflow.run(scenario, [0.0])


def test_outside_closed_form_domain(workflow):
    with pytest.raises(ClosedFormDomainError):
        workflow.run(parse_scenario(two_level_text(gamma=0.5)), [0.0])
