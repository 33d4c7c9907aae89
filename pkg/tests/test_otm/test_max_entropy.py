"""
Tests for the maximum-entropy property of the guessed distribution
"""
import numpy as np
import pytest

from src.models.random_models import random_model
from src.otm.ensemble import build_guessed_ensemble
from src.otm.max_entropy import constrained_directions, max_entropy_property_check


def test_directions_preserve_both_constraints() -> None:
    """
    Test directions preserve both constraints
    """
    energies = np.array([0.1, -0.4, 1.2, 0.7])
    basis = constrained_directions(energies)
    assert basis.shape == (4, 2)
    np.testing.assert_allclose(basis.sum(axis=0), 0.0, atol=1e-12)
    np.testing.assert_allclose(energies @ basis, 0.0, atol=1e-12)


@pytest.mark.parametrize("seed", range(4))
def test_guessed_distribution_maximizes_entropy(seed) -> None:
    """
    Test guessed distribution maximizes entropy
    """
    m = random_model(seed, 3, 2, n_segments=2, time_dependent_system=True)
    g = build_guessed_ensemble(m)
    report = max_entropy_property_check(g, m, n_perturbations=20, seed=seed)
    assert report.passed
    assert not report.skipped
    assert report.n_tested == 20
    assert report.worst_increase <= 1e-9


def test_two_outcomes_are_skipped(two_qubit_model, two_qubit_ensemble) -> None:
    """
    Test two outcomes are skipped
    """
    report = max_entropy_property_check(two_qubit_ensemble, two_qubit_model, n_perturbations=5)
    assert report.skipped
    assert report
    assert "outcomes" in report.notice
