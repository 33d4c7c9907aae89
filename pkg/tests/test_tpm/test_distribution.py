"""
Tests for the two-point measurement distribution
"""
import math

import numpy as np
import pytest

from src.core.config import settings
from src.core.exceptions import DimensionError, PreconditionError
from src.models.closed_system import quench_model
from src.models.random_models import random_hermitian, random_model
from src.otm.ensemble import build_guessed_ensemble
from src.otm.schemas import ThermalModel
from src.qcore.schemas import Protocol
from src.thermo.gibbs import free_energy_difference
from src.tpm.distribution import build_tpm_distribution, exact_work_expectation, standard_jarzynski_average


@pytest.mark.parametrize("d_system,d_bath", [(2, 2), (2, 3), (3, 2)])
def test_distribution_normalized_and_ordered(d_system, d_bath) -> None:
    """
    Test distribution normalized and ordered
    """
    m = random_model(d_system + d_bath, d_system, d_bath)
    d = build_tpm_distribution(m)
    assert len(d.trajectories) == (d_system * d_bath) ** 2
    assert d.probabilities.sum() == pytest.approx(1.0, abs=1e-12)
    first, second = d.trajectories[0], d.trajectories[1]
    assert (first.epsilon, first.q) == (second.epsilon, second.q)
    for t in d.trajectories[:5]:
        assert t.work == pytest.approx((t.epsilon_prime + t.q_prime) - (t.epsilon + t.q))


@pytest.mark.parametrize("seed", range(6))
def test_standard_jarzynski_equality(seed) -> None:
    """
    Test standard jarzynski equality
    """
    m = random_model(seed, 2, 3, n_segments=2, time_dependent_system=True)
    g = build_guessed_ensemble(m)
    d = build_tpm_distribution(m)
    expected = math.exp(-m.beta_s * g.delta_f)
    assert standard_jarzynski_average(d, m.beta_s) == pytest.approx(expected, rel=1e-8)


def test_mean_work_matches_energy_change(driven_model) -> None:
    """
    Test mean work matches energy change
    """
    d = build_tpm_distribution(driven_model)
    assert d.mean_work() == pytest.approx(exact_work_expectation(driven_model), abs=1e-10)


def test_two_temperatures_rejected() -> None:
    """
    Test two temperatures rejected
    """
    with pytest.raises(PreconditionError):
        build_tpm_distribution(random_model(0, 2, 2, beta_s=1.0, beta_b=0.5))


def test_dimension_limit(monkeypatch) -> None:
    """
    Test dimension limit
    """
    monkeypatch.setattr(settings.numerics, "tpm_max_dim", 4)
    with pytest.raises(DimensionError):
        build_tpm_distribution(random_model(0, 2, 3))


def test_two_qubit_work_support(two_qubit_model) -> None:
    """
    Pure dephasing only flips the bath qubit: work in {-2 omega_B, 0, +2 omega_B}
    """
    d = build_tpm_distribution(two_qubit_model)
    assert len(d.trajectories) == 16
    support = sorted({round(t.work, 9) for t in d.trajectories if t.probability > 1e-12})
    assert support == [-2.0, 0.0, 2.0]


def test_two_qubit_exact_work_is_tanh_one(two_qubit_model) -> None:
    """
    The bath gains minus the guessed heat while the system energy is conserved
    """
    assert exact_work_expectation(two_qubit_model) == pytest.approx(math.tanh(1.0), rel=1e-10)
    assert build_tpm_distribution(two_qubit_model).mean_work() == pytest.approx(math.tanh(1.0), rel=1e-9)


@pytest.mark.parametrize("seed", range(4))
def test_quench_jarzynski_matches_free_energy_change(seed: int) -> None:
    """
    <e^{-beta W}> = e^{-beta dF_S} for an uncoupled sudden quench
    """
    m = quench_model(seed, beta=0.8)
    delta_f = free_energy_difference(m.h_s_initial, m.h_s_final, m.beta_s)
    average = standard_jarzynski_average(build_tpm_distribution(m), m.beta_s)
    assert average == pytest.approx(math.exp(-m.beta_s * delta_f), rel=1e-8)


def test_identity_evolution_has_zero_work() -> None:
    """
    U = I with constant H_S keeps every trajectory on the diagonal
    """
    rng = np.random.default_rng(11)
    h_s, h_b = random_hermitian(rng, (2,)), random_hermitian(rng, (3,))
    m = ThermalModel(
        n_system_factors=1,
        protocol=Protocol.from_segments([], dims=(2, 3)),
        h_s_initial=h_s,
        h_s_final=h_s,
        h_b=h_b,
        beta_s=1.0,
        beta_b=1.0,
    )
    d = build_tpm_distribution(m)
    for t in d.trajectories:
        if t.probability > 1e-20:
            assert t.epsilon == pytest.approx(t.epsilon_prime, abs=1e-12)
            assert t.q == pytest.approx(t.q_prime, abs=1e-12)
            assert t.work == pytest.approx(0.0, abs=1e-12)
    assert standard_jarzynski_average(d, 1.0) == pytest.approx(1.0, rel=1e-12)
    assert exact_work_expectation(m) == pytest.approx(0.0, abs=1e-12)
