# tests/plugins/models/test_two_level.py
import math

import numpy as np
import pytest

from nhentropy.core.algebra import Axis, identity, pauli
from nhentropy.core.dynamics import propagate_exact, propagate_log
from nhentropy.core.entropy import s_vn
from nhentropy.core.exceptions import ClosedFormDomainError, ModelParameterError
from nhentropy.plugins.models.two_level import (
    TwoLevelModel,
    TwoLevelParams,
    TwoLevelSolution,
    build_hamiltonian,
    f_components,
    fyfzF,
    initial_state,
    omega_closed,
    omega_determinant,
    rho_closed,
    snh_closed,
    snh_limit,
    svn_closed,
    svn_literal,
    trace_closed,
)

GAMMA_TILDES = (-2.0, 2.0)
P_VALUES = (0.01, 0.25, 0.5, 0.75, 0.99)
TAUS = (0.0, 0.3, 1.0, 2.0, 3.1, 4.0)


def params(gamma=2.0, p=0.25, k=0.0, delta=1.0) -> TwoLevelParams:
    return TwoLevelParams(delta=delta, gamma=gamma, p=p, k=k)


def test_derived_quantities():
    par = params(gamma=4.0, p=0.75, delta=2.0)
    assert par.gamma_tilde == 2.0
    assert par.p_bar == 0.5
    assert par.mu == pytest.approx(math.sqrt(3.0))
    assert not par.is_pure
    assert params(p=1.0).is_pure
    assert par.with_k(1.5).k == 1.5


@pytest.mark.parametrize("gamma", [0.5, -1.0, 1.0])
def test_mu_requires_closed_form_domain(gamma):
    par = params(gamma=gamma)
    assert not par.in_closed_form_domain
    with pytest.raises(ClosedFormDomainError):
        _ = par.mu
    with pytest.raises(ClosedFormDomainError):
        fyfzF(par, 1.0)


def test_components_at_zero():
    par = params(p=0.25)
    mu2 = par.mu ** 2
    fy, fz, f = fyfzF(par, 0.0)
    assert fy == pytest.approx(0.0, abs=1e-15)
    assert fz == pytest.approx(mu2 * par.p_bar)
    assert f == pytest.approx(mu2)
    f1, f2 = f_components(par, 0.0)
    assert f1 == pytest.approx(mu2 ** 2 * par.p_bar ** 2)
    assert f2 == pytest.approx(mu2 ** 2 * par.p_bar ** 2)


def test_negative_tau_is_rejected():
    with pytest.raises(ModelParameterError):
        omega_closed(params(), -0.1)


@pytest.mark.parametrize("gamma", GAMMA_TILDES)
@pytest.mark.parametrize("p", P_VALUES)
@pytest.mark.parametrize("k", [0.0, 1.0, 1.5])
def test_closed_form_matches_exact_propagation(gamma, p, k):
    par = params(gamma=gamma, p=p, k=k)
    ham = build_hamiltonian(par)
    omega0 = initial_state(p)
    assert omega_closed(par, 0.0) == omega0
    for tau in TAUS:
        expected = propagate_exact(ham, omega0, tau)
        closed = omega_closed(par, tau)
        scale = max(1.0, expected.max_abs())
        assert np.max(np.abs(closed.data - expected.data)) / scale < 1e-9
        assert trace_closed(par, tau) == pytest.approx(expected.real_trace(), rel=1e-9)


def test_time_scale_enters_through_tau():
    par = params(gamma=4.0, delta=2.0, p=0.25)
    expected = propagate_exact(build_hamiltonian(par), initial_state(0.25), 0.5)
    solution = TwoLevelSolution(par)
    assert solution.omega(0.5).allclose(expected, atol=1e-9)
    assert solution.trace(0.5) == pytest.approx(trace_closed(par, 1.0))


@pytest.mark.parametrize("p", P_VALUES)
def test_rho_is_gauge_independent(p):
    for tau in TAUS:
        assert rho_closed(params(p=p, k=0.0), tau) == rho_closed(params(p=p, k=1.5), tau)
        assert trace_closed(params(p=p, k=1.0), tau) == pytest.approx(
            trace_closed(params(p=p), tau) * math.exp(-2.0 * math.sqrt(3.0) * tau), rel=1e-12
        )


@pytest.mark.parametrize("p", P_VALUES)
def test_trace_symmetry_under_reflection(p):
    for tau in TAUS:
        assert trace_closed(params(gamma=2.0, p=p), tau) == pytest.approx(
            trace_closed(params(gamma=-2.0, p=1.0 - p), tau), rel=1e-10
        )


@pytest.mark.parametrize("gamma", GAMMA_TILDES)
@pytest.mark.parametrize("p", P_VALUES)
def test_von_neumann_entropy_decays(gamma, p):
    assert svn_closed(params(gamma=gamma, p=p), 8.0) < 0.01


@pytest.mark.parametrize("gamma", GAMMA_TILDES)
@pytest.mark.parametrize("p", P_VALUES)
def test_eigenvalue_entropy_matches_f1_form(gamma, p):
    par = params(gamma=gamma, p=p)
    for tau in TAUS:
        _, _, f = fyfzF(par, tau)
        f1, _ = f_components(par, tau)
        r = math.sqrt(max(f1, 0.0)) / f
        literal = -sum(w * math.log(w) for w in (0.5 * (1 + r), 0.5 * (1 - r)) if w > 1e-14)
        assert svn_closed(par, tau) == pytest.approx(literal, abs=1e-10)


@pytest.mark.parametrize("p", P_VALUES)
def test_literal_entropy_at_zero(p):
    expected = -sum(x * math.log(x) for x in (p, 1 - p))
    assert svn_literal(params(p=p), 0.0) == pytest.approx(expected, abs=1e-12)
    assert s_vn(rho_closed(params(p=p), 0.0)) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("k", [0.0, 1.0])
@pytest.mark.parametrize("p", [0.25, 0.5, 0.99])
def test_determinant(k, p):
    par = params(p=p, k=k)
    for tau in (0.0, 0.5, 1.0):
        assert np.linalg.det(omega_closed(par, tau).data).real == pytest.approx(omega_determinant(par, tau), rel=1e-8)


@pytest.mark.parametrize("k", [0.0, 1.0, 1.5])
def test_snh_matches_log_domain_propagation(k):
    par = params(p=0.25, k=k)
    grid = np.linspace(0.0, 4.0, 41)
    states = propagate_log(build_hamiltonian(par), initial_state(0.25), grid)
    for state in states:
        numeric = s_vn(state.rho) - state.log_trace
        assert snh_closed(par, state.time) == pytest.approx(numeric, abs=1e-9)


@pytest.mark.parametrize("p", P_VALUES)
def test_snh_limit_at_critical_gauge(p):
    par = params(p=p, k=1.0)
    mu = par.mu
    limit = snh_limit(par)
    assert limit == pytest.approx(math.log(2 * mu ** 2 / (2.0 * (2.0 - mu * par.p_bar))))
    assert snh_closed(par, 10.0) == pytest.approx(limit, abs=1e-9)
    states = propagate_log(build_hamiltonian(par), initial_state(p), np.linspace(0.0, 10.0, 101))
    assert s_vn(states[-1].rho) - states[-1].log_trace == pytest.approx(limit, abs=1e-3)


def test_snh_limit_only_for_critical_gauge():
    assert snh_limit(params(k=0.0)) is None
    assert snh_limit(params(k=1.5)) is None


def test_solution_diagnostics():
    diagnostics = TwoLevelSolution(params()).diagnostics(1.0)
    assert set(diagnostics) == {"F1", "F2", "svn_literal", "det_omega"}
    assert diagnostics["det_omega"] == pytest.approx(0.25 * 0.75)


class TestTwoLevelModel:
    model = TwoLevelModel()

    def test_coerce_text_values(self):
        par = self.model.coerce({"delta": "1", "gamma": " 2 ", "p": "0.25"})
        assert par == params()
        assert self.model.coerce({"delta": 1, "gamma": 2, "p": 0.25, "k": "1.5"}).k == 1.5

    @pytest.mark.parametrize("raw, key", [
        ({"delta": "0", "gamma": "2", "p": "0.5"}, "delta"),
        ({"delta": "1", "gamma": "2", "p": "1.5"}, "p"),
        ({"delta": "1", "gamma": "x", "p": "0.5"}, "gamma"),
        ({"delta": "1", "gamma": "0.5", "p": "0.5", "k": "1"}, "k"),
    ])
    def test_coerce_errors_name_the_parameter(self, raw, key):
        with pytest.raises(ModelParameterError) as excinfo:
            self.model.coerce(raw)
        assert excinfo.value.key == key

    def test_missing_parameter(self):
        with pytest.raises(ModelParameterError) as excinfo:
            self.model.coerce({"delta": "1", "gamma": "2"})
        assert excinfo.value.key == "p"
        assert excinfo.value.reason_code == "missing"

    def test_hamiltonian_with_gauge_shift(self):
        ham = self.model.build_hamiltonian(params(k=1.0))
        assert ham.h == -pauli(Axis.X)
        assert ham.gamma == 2.0 * pauli(Axis.Z) + math.sqrt(3.0) * identity(2)

    def test_numerics_outside_closed_form_domain(self):
        par = self.model.coerce({"delta": "1", "gamma": "0.5", "p": "0.5"})
        assert self.model.closed_form(par) is None
        assert self.model.build_hamiltonian(par).gamma == 0.5 * pauli(Axis.Z)
        assert self.model.time_scale(params(delta=3.0, gamma=6.0)) == 3.0


@pytest.mark.parametrize("gamma_tilde", [-3.0, -2.0, -1.5, 1.5, 2.0, 3.0])
@pytest.mark.parametrize("p", [0.0, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0])
@pytest.mark.parametrize("k", [0.0, 1.0, 1.5])
def test_f1_equals_bloch_length_squared(gamma_tilde, p, k):
    par = TwoLevelParams(delta=1.0, gamma=gamma_tilde, p=p, k=k)
    for tau in (0.0, 0.3, 1.0, 2.5, 4.0, 8.0):
        fy, fz, f = fyfzF(par, tau)
        f1, _ = f_components(par, tau)
        # F₁ ≤ F²，按 F² 取相对误差
        assert abs(f1 - (4.0 * fy * fy + fz * fz)) <= 1e-10 * f * f
