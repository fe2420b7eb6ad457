# tests/core/algebra/test_spectral.py
import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from nhentropy.core.algebra import Axis, ComplexMatrix, NHHamiltonian, herm_eig, identity, mat_exp, pauli, psd_log
from nhentropy.core.config import AppSettings, reset_settings
from nhentropy.core.exceptions import (
    ConvergenceError,
    MatrixOverflowError,
    NonHermitianError,
    NotPositiveSemidefiniteError,
)
from tests.strategies import bounded_matrices, hermitian_matrices, hermitian_with_spectrum


@settings(max_examples=60, deadline=None)
@given(hermitian_matrices(max_dim=8), st.sampled_from(["numpy", "jacobi"]))
def test_herm_eig_reconstructs_and_is_orthonormal(m, solver):
    decomposition = herm_eig(m, solver=solver)
    v = decomposition.eigenvectors.data
    scale = max(1.0, m.max_abs())
    assert_allclose(decomposition.reconstruct().data, m.data, atol=1e-10 * scale)
    assert_allclose(v.conj().T @ v, np.eye(m.dim), atol=1e-10)
    assert list(decomposition.eigenvalues) == sorted(decomposition.eigenvalues)


def test_jacobi_matches_numpy(make_hermitian):
    m = make_hermitian(6)
    assert_allclose(herm_eig(m, solver="jacobi").values, np.linalg.eigvalsh(m.data), atol=1e-10)


def test_jacobi_sweep_cap_raises(make_hermitian):
    reset_settings(AppSettings(eig_solver="jacobi", jacobi_max_sweeps=1))
    with pytest.raises(ConvergenceError) as excinfo:
        herm_eig(make_hermitian(6))
    assert excinfo.value.sweeps == 1


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        herm_eig(ComplexMatrix([[0, 1], [0, 0]]))


def test_mat_exp_of_pauli_rotation():
    theta = 0.7
    sx = pauli(Axis.X)
    expected = math.cos(theta) * identity(2) - 1j * math.sin(theta) * sx
    assert mat_exp(-1j * theta * sx).allclose(expected, atol=1e-14)


def test_mat_exp_hermitian_and_general_paths_agree_with_scipy(make_hermitian):
    h = make_hermitian(4)
    assert_allclose(mat_exp(h).data, scipy.linalg.expm(h.data), rtol=1e-10, atol=1e-10)
    ham = NHHamiltonian(h=make_hermitian(4), gamma=make_hermitian(4))
    m = -0.5j * ham.total()
    assert_allclose((mat_exp(m) @ mat_exp(-m)).data, np.eye(4), atol=1e-10)


def test_mat_exp_against_taylor_series():
    # m = −iℋt，ℋ = −σx − 2iσz，t = 0.5
    ham = NHHamiltonian(h=-pauli(Axis.X), gamma=2.0 * pauli(Axis.Z))
    m = (-0.5j * ham.total()).data
    term = np.eye(2, dtype=complex)
    total = term.copy()
    for n in range(1, 50):
        term = term @ m / n
        total = total + term
    assert_allclose(mat_exp(ComplexMatrix(m)).data, total, atol=1e-10)


def test_mat_exp_overflow_guard():
    with pytest.raises(MatrixOverflowError):
        mat_exp(ComplexMatrix([[800.0, 0.0], [0.0, 0.0]]))
    # 反厄米参数的增长为 0，不受上限约束
    assert mat_exp(ComplexMatrix([[800j, 0.0], [0.0, 0.0]])).max_abs() == pytest.approx(1.0)


def test_psd_log():
    assert psd_log(0.5 * identity(2)).allclose(math.log(0.5) * identity(2))
    # 零本征值分量置 0
    assert psd_log(ComplexMatrix.diag([1.0, 0.0])).allclose(ComplexMatrix.zeros(2))
    with pytest.raises(NotPositiveSemidefiniteError):
        psd_log(ComplexMatrix.diag([1.0, -0.5]))


_times = st.floats(min_value=0.0, max_value=2.0)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["hermitian", "anti_hermitian", "general"]).flatmap(bounded_matrices),
    _times,
    _times,
)
def test_mat_exp_group_property(m, s, t):
    left = mat_exp(m * (s + t)).data
    first, second = mat_exp(m * s).data, mat_exp(m * t).data
    scale = max(1.0, np.linalg.norm(first, 2) * np.linalg.norm(second, 2))
    assert np.linalg.norm(left - first @ second, 2) <= 1e-9 * scale


@settings(max_examples=60, deadline=None)
@given(hermitian_with_spectrum(-20.0, 20.0, max_spread=12.0))
def test_psd_log_inverts_mat_exp(h):
    assert_allclose(psd_log(mat_exp(h)).data, h.data, rtol=0, atol=1e-8)
