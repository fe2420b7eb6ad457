# tests/plugins/models/test_const_gamma.py
import functools
import math

import numpy as np
import pytest

from nhentropy.core.algebra import Axis, ComplexMatrix, pauli
from nhentropy.core.dynamics import integrate, rhs_omega
from nhentropy.core.entropy import entropy_profile
from nhentropy.core.exceptions import ModelParameterError
from nhentropy.plugins.models.const_gamma import ConstGammaModel, ConstGammaParams, const_gamma_solution

model = ConstGammaModel()


def test_coerce_defaults():
    params = model.coerce({"gamma0": "1"})
    assert params.gamma0 == 1.0
    assert params.h == ComplexMatrix.zeros(2)
    assert params.rho0 == ComplexMatrix.diag([0.5, 0.5])
    assert params.s_vn0 == pytest.approx(math.log(2.0))


def test_coerce_expression_and_constants():
    params = model.coerce({"gamma0": "0.5", "H": "omega*sx", "p": "0.2"}, constants={"omega": 3.0})
    assert params.h == 3.0 * pauli(Axis.X)
    assert params.rho0 == ComplexMatrix.diag([0.2, 0.8])


def test_missing_decay_rate():
    with pytest.raises(ModelParameterError) as excinfo:
        model.coerce({"H": "sz"})
    assert excinfo.value.key == "gamma0"
    assert excinfo.value.reason_code == "missing"


def test_hamiltonian_must_be_two_by_two():
    with pytest.raises(ModelParameterError) as excinfo:
        model.coerce({"gamma0": "1", "H": "id(3)"})
    assert excinfo.value.key == "H"


def test_decay_operator_is_half_rate():
    params = model.coerce({"gamma0": "2"})
    assert model.build_hamiltonian(params).gamma == ComplexMatrix.identity(2)
    assert model.initial_state(params) is params.rho0


def test_closed_form_values():
    params = model.coerce({"gamma0": "1", "p": "0.25"})
    trace, svn, snh = const_gamma_solution(params, 2.0)
    assert trace == pytest.approx(math.exp(-2.0))
    assert svn == pytest.approx(params.s_vn0)
    assert snh == pytest.approx(params.s_vn0 + 2.0)
    solution = model.closed_form(params)
    assert solution.s_nh(2.0) == pytest.approx(snh)
    assert solution.omega(0.0) == params.rho0


def test_rho_rotates_unitarily():
    params = ConstGammaParams(gamma0=0.3, h=pauli(Axis.X), rho0=ComplexMatrix.diag([1.0, 0.0]))
    rho = model.closed_form(params).rho(math.pi / 2)
    assert rho == ComplexMatrix.diag([0.0, 1.0])


def test_numeric_trajectory_matches_closed_form():
    params = model.coerce({"gamma0": "1", "H": "0.7*sx + 0.2*sz", "p": "0.5"})
    ham = model.build_hamiltonian(params)
    grid = np.linspace(0.0, 10.0, 101)
    trajectory = integrate(functools.partial(rhs_omega, ham), params.rho0, grid)
    solution = model.closed_form(params)
    for state in trajectory.states:
        expected = solution.trace(state.time)
        assert abs(state.trace - expected) / expected < 1e-8

    for sample in entropy_profile(trajectory, ham.gamma):
        assert sample.s_vn == pytest.approx(math.log(2.0), abs=1e-9)
        assert sample.s_nh == pytest.approx(math.log(2.0) + sample.time, abs=1e-8)
        assert sample.rate_vn == pytest.approx(0.0, abs=1e-9)
        assert sample.rate_nh == pytest.approx(1.0, abs=1e-8)
