"""
Tests for Gibbs states and free energies
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import ParameterError
from src.models.random_models import random_hermitian
from src.qcore.operators import identity, pauli, tensor
from src.qcore.schemas import Operator
from src.qcore.spectral import eig_hermitian
from src.thermo.entropy import energy_expectation, von_neumann_entropy
from src.thermo.gibbs import (
    free_energy,
    free_energy_difference,
    gibbs,
    gibbs_probabilities,
    log_partition_function,
)


@pytest.mark.parametrize("beta", [0.1, 1.0, 5.0])
def test_qubit_populations(beta) -> None:
    """
    Test qubit populations
    """
    state = gibbs(pauli("z"), beta)
    ground = math.exp(beta) / (2 * math.cosh(beta))
    assert state.state.data[1, 1].real == pytest.approx(ground, rel=1e-12)
    assert state.partition_function == pytest.approx(2 * math.cosh(beta), rel=1e-12)
    assert state.free_energy == pytest.approx(-math.log(2 * math.cosh(beta)) / beta, rel=1e-12)


def test_log_partition_function_is_shift_stable() -> None:
    """
    Test log partition function is shift stable
    """
    energies = np.array([1000.0, 1001.0])
    assert log_partition_function(energies, 1.0) == pytest.approx(-1000.0 + math.log(1 + math.exp(-1)))


def test_log_state_matches_matrix_log() -> None:
    """
    Test log state matches matrix log
    """
    h = Operator.from_array(np.diag([0.0, 1.0, 3.0]))
    state = gibbs(h, 2.0)
    expected = np.log(np.diag(state.state.data).real)
    np.testing.assert_allclose(np.diag(state.log_state.data).real, expected, atol=1e-12)


def test_log_state_finite_when_weights_underflow() -> None:
    """
    Test log state finite when weights underflow
    """
    h = Operator.from_array(np.diag([0.0, 2000.0]))
    state = gibbs(h, 1.0)
    assert state.state.data[1, 1].real == 0.0
    assert state.log_state.data[1, 1].real == pytest.approx(-2000.0)


def test_high_spectrum_keeps_log_partition_function() -> None:
    """
    e^{-beta E_min} below the float range saturates Z but not ln Z
    """
    h = Operator.from_array(np.diag([800.0, 801.0]))
    state = gibbs(h, 1.0)
    log_norm = math.log(1 + math.exp(-1))
    log_z = -800.0 + log_norm
    assert state.partition_function == math.ulp(0.0)
    assert state.log_partition_function == pytest.approx(log_z, rel=1e-14)
    assert state.free_energy == pytest.approx(-log_z, rel=1e-14)
    assert state.state.data[0, 0].real == pytest.approx(math.exp(-log_norm), rel=1e-12)
    np.testing.assert_allclose(np.diag(state.log_state.data).real, [-log_norm, -1 - log_norm], atol=1e-12)


def test_low_spectrum_overflows_to_inf() -> None:
    """
    Negative energies push Z past the float range
    """
    state = gibbs(Operator.from_array(np.diag([-800.0, 0.0])), 1.0)
    assert state.partition_function == math.inf
    assert state.log_partition_function == pytest.approx(800.0, rel=1e-14)


@pytest.mark.parametrize("beta", [0.0, -1.0, math.inf, math.nan])
def test_invalid_beta(beta) -> None:
    """
    Test invalid beta
    """
    with pytest.raises(ParameterError):
        gibbs(pauli("z"), beta)


def test_free_energy_difference() -> None:
    """
    Test free energy difference
    """
    h0, h1 = pauli("z"), pauli("z") * 2.0
    assert free_energy_difference(h0, h1, 1.0) == pytest.approx(free_energy(h1, 1.0) - free_energy(h0, 1.0))
    assert free_energy_difference(h0, h0, 1.0) == 0.0


@given(
    energies=st.lists(st.floats(min_value=-50, max_value=50), min_size=1, max_size=8),
    beta=st.floats(min_value=0.01, max_value=20),
)
@settings(max_examples=50, deadline=None)
def test_gibbs_probabilities_normalized(energies, beta) -> None:
    """
    Test gibbs probabilities normalized
    """
    p = gibbs_probabilities(np.array(energies), beta)
    assert np.all(p >= 0)
    assert abs(p.sum() - 1) < 1e-12


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), beta=st.floats(min_value=0.05, max_value=10))
@settings(max_examples=50, deadline=None)
def test_free_energy_is_energy_minus_entropy(seed: int, beta: float) -> None:
    """
    F = <H> - S / beta for every Gibbs state
    """
    h = random_hermitian(np.random.default_rng(seed), (4,))
    state = gibbs(h, beta)
    expected = energy_expectation(h, state.state) - von_neumann_entropy(state.state) / beta
    assert state.free_energy == pytest.approx(expected, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("beta", [0.3, 1.0, 4.0])
def test_partition_function_is_multiplicative(seed: int, beta: float) -> None:
    """
    Z(H_S ⊗ I + I ⊗ H_B) = Z_S Z_B
    """
    rng = np.random.default_rng(seed)
    h_s, h_b = random_hermitian(rng, (2,)), random_hermitian(rng, (3,))
    joint = tensor(h_s, identity((3,))) + tensor(identity((2,)), h_b)
    z_joint = gibbs(joint, beta)
    z_s, z_b = gibbs(h_s, beta), gibbs(h_b, beta)
    assert z_joint.partition_function == pytest.approx(z_s.partition_function * z_b.partition_function, rel=1e-10)
    assert z_joint.log_partition_function == pytest.approx(
        z_s.log_partition_function + z_b.log_partition_function, rel=1e-10, abs=1e-12
    )


@pytest.mark.parametrize("seed", range(4))
def test_zero_temperature_limit_is_ground_projector(seed: int) -> None:
    """
    At beta ||H|| = 50 the Gibbs state has fidelity >= 1 - 1e-8 with the ground state
    """
    basis = eig_hermitian(random_hermitian(np.random.default_rng(seed), (3,))).eigenvectors
    h = Operator.from_array((basis * np.array([0.0, 1.0, 2.0])) @ basis.conj().T)
    state = gibbs(h, 50.0 / 2.0)
    ground = basis[:, 0]
    fidelity = (ground.conj() @ state.state.op.data @ ground).real
    assert fidelity >= 1 - 1e-8


def test_diagonal_weights() -> None:
    """
    diag(0, 1, 2) at beta = 1 has Z = 1 + e^-1 + e^-2
    """
    state = gibbs(Operator.from_array(np.diag([0.0, 1.0, 2.0])), 1.0)
    assert state.partition_function == pytest.approx(1.503214724, rel=1e-9)
    np.testing.assert_allclose(
        np.diag(state.state.op.data).real, np.exp(-np.arange(3.0)) / state.partition_function, atol=1e-14
    )
