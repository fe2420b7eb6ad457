# tests/core/entropy/test_profile.py
import math
from functools import partial

import numpy as np
import pytest

from nhentropy.core.algebra import Axis, ComplexMatrix, NHHamiltonian, pauli
from nhentropy.core.dynamics import integrate, propagate_log, rhs_omega
from nhentropy.core.entropy import EntropySample, entropy_profile, entropy_profile_log

TWO_LEVEL = NHHamiltonian(h=-pauli(Axis.X), gamma=2.0 * pauli(Axis.Z))


def test_profile_satisfies_entropy_relation():
    omega0 = ComplexMatrix.diag([0.25, 0.75])
    grid = np.linspace(0.0, 2.0, 21)
    trajectory = integrate(partial(rhs_omega, TWO_LEVEL), omega0, grid)
    samples = entropy_profile(trajectory, TWO_LEVEL.gamma, time_scale=2.0)
    assert len(samples) == len(grid)
    for sample, t in zip(samples, grid):
        assert sample.tau == pytest.approx(2.0 * t)
        assert abs(sample.s_nh - sample.s_vn + math.log(sample.trace_omega)) < 1e-10
        assert sample.rate_vn is not None and sample.rate_nh is not None


def test_log_profile_agrees_with_direct_profile():
    omega0 = ComplexMatrix.diag([0.25, 0.75])
    grid = np.linspace(0.0, 2.0, 11)
    direct = entropy_profile(integrate(partial(rhs_omega, TWO_LEVEL), omega0, grid, substeps=1000), TWO_LEVEL.gamma)
    logged = entropy_profile_log(propagate_log(TWO_LEVEL, omega0, grid), TWO_LEVEL.gamma)
    for a, b in zip(direct, logged):
        assert a.s_vn == pytest.approx(b.s_vn, abs=1e-9)
        assert a.s_nh == pytest.approx(b.s_nh, abs=1e-9)
        assert a.log_trace == pytest.approx(b.log_trace, abs=1e-9)
        assert a.rate_nh == pytest.approx(b.rate_nh, rel=1e-6)


def test_pure_state_rates_are_undefined():
    omega0 = ComplexMatrix.diag([1.0, 0.0])
    samples = entropy_profile_log(propagate_log(TWO_LEVEL, omega0, np.linspace(0.0, 1.0, 5)), TWO_LEVEL.gamma)
    assert all(s.rate_vn is None and s.rate_nh is None for s in samples)
    assert all(s.s_vn == pytest.approx(0.0, abs=1e-9) for s in samples)


def test_sample_rejects_broken_relation():
    rho = ComplexMatrix.diag([0.5, 0.5])
    with pytest.raises(ValueError):
        EntropySample(time=0.0, tau=0.0, log_trace=0.0, s_vn=math.log(2), s_nh=0.0, rho=rho)


def test_relation_bound_is_absolute_for_large_log_trace():
    rho = ComplexMatrix.diag([0.5, 0.5])
    s_vn = math.log(2)
    EntropySample(time=0.0, tau=0.0, log_trace=-50.0, s_vn=s_vn, s_nh=s_vn + 50.0 + 5e-11, rho=rho)
    with pytest.raises(ValueError):
        EntropySample(time=0.0, tau=0.0, log_trace=-50.0, s_vn=s_vn, s_nh=s_vn + 50.0 + 5e-10, rho=rho)
