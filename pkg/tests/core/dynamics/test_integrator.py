# tests/core/dynamics/test_integrator.py
from functools import partial

import numpy as np
import pytest
from numpy.testing import assert_allclose

from nhentropy.core.algebra import Axis, ComplexMatrix, NHHamiltonian, pauli
from nhentropy.core.dynamics import (
    integrate,
    normalize,
    propagate_exact,
    rhs_omega,
    rhs_rho,
    substep_count,
)
from nhentropy.core.exceptions import InvariantViolationError


def two_level(gamma_tilde: float) -> NHHamiltonian:
    return NHHamiltonian(h=-pauli(Axis.X), gamma=gamma_tilde * pauli(Axis.Z))


@pytest.mark.parametrize("interval, substeps, expected", [(0.1, 100, 10), (0.01, 100, 1), (0.001, 100, 1), (1.0, 7, 7)])
def test_substep_count(interval, substeps, expected):
    assert substep_count(interval, substeps) == expected


@pytest.mark.parametrize("gamma_tilde", [-2.0, 2.0])
@pytest.mark.parametrize("p", [0.01, 0.25, 0.5, 0.75, 0.99])
def test_rk4_matches_exact_propagator(gamma_tilde, p):
    ham = two_level(gamma_tilde)
    omega0 = ComplexMatrix.diag([p, 1 - p])
    grid = np.linspace(0.0, 4.0, 9)
    trajectory = integrate(partial(rhs_omega, ham), omega0, grid, substeps=1000)
    for state in trajectory.states:
        expected = propagate_exact(ham, omega0, state.time)
        scale = max(1.0, expected.max_abs())
        assert np.max(np.abs(state.omega.data - expected.data)) / scale < 1e-8


def test_random_three_level_system(make_hermitian, make_density):
    ham = NHHamiltonian(h=make_hermitian(3), gamma=make_hermitian(3, scale=0.3))
    omega0 = make_density(3)
    grid = np.linspace(0.0, 1.0, 11)
    trajectory = integrate(partial(rhs_omega, ham), omega0, grid, substeps=1000)
    assert_allclose(trajectory.grid, grid)
    assert trajectory.initial.omega == omega0
    assert_allclose(trajectory[-1].omega.data, propagate_exact(ham, omega0, 1.0).data, atol=1e-8)


def test_normalized_equation_is_consistent_with_linear_one():
    ham = two_level(2.0)
    rho0 = ComplexMatrix.diag([0.25, 0.75])
    grid = np.linspace(0.0, 4.0, 41)
    linear = integrate(partial(rhs_omega, ham), rho0, grid, substeps=1000)
    nonlinear = integrate(partial(rhs_rho, ham), rho0, grid, substeps=1000)
    for omega_state, rho_state in zip(linear.states, nonlinear.states):
        assert_allclose(normalize(omega_state.omega).data, rho_state.omega.data, atol=1e-7)
        assert abs(rho_state.trace - 1.0) < 1e-9


def test_invalid_grids_and_substeps():
    rhs = partial(rhs_omega, two_level(2.0))
    omega0 = ComplexMatrix.diag([0.5, 0.5])
    with pytest.raises(ValueError):
        integrate(rhs, omega0, [0.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        integrate(rhs, omega0, [])
    with pytest.raises(ValueError):
        integrate(rhs, omega0, [0.0, 1.0], substeps=0)


def test_invariant_violation_reports_time():
    def shrinking(y: ComplexMatrix) -> ComplexMatrix:
        return ComplexMatrix(-np.eye(2))

    with pytest.raises(InvariantViolationError) as excinfo:
        integrate(shrinking, ComplexMatrix.diag([0.5, 0.5]), [0.0, 0.25, 1.0])
    assert excinfo.value.time == 1.0
