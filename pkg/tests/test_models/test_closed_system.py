"""
Tests for closed-system recovery with an uncoupled bath
"""
import numpy as np
import pytest

from src.core.exceptions import PreconditionError
from src.models.closed_system import (
    closed_system_reduction_check,
    interaction_norms,
    quench_model,
    without_bath,
)
from src.models.random_models import random_model
from src.models.spin_boson import spin_boson_model
from src.otm.ensemble import build_guessed_ensemble


@pytest.mark.parametrize("seed", range(6))
def test_uncoupled_random_models_reduce(seed) -> None:
    """
    Test uncoupled random models reduce
    """
    m = random_model(seed, (2, 3)[seed % 2], 3, n_segments=2, time_dependent_system=True, interaction_scale=0.0)
    report = closed_system_reduction_check(m)
    assert report.passed
    assert abs(report.guessed_heat) <= 1e-10
    assert report.guessed_state_residual <= 1e-10


@pytest.mark.parametrize("seed", range(4))
def test_quench_reduces(seed) -> None:
    """
    Test quench reduces
    """
    report = closed_system_reduction_check(quench_model(seed))
    assert report.passed
    assert report.jarzynski_residual <= 1e-8


def test_interaction_norms(driven_model) -> None:
    """
    Test interaction norms
    """
    assert max(interaction_norms(driven_model)) > 1e-3
    with pytest.raises(PreconditionError):
        closed_system_reduction_check(driven_model)


def test_model_without_system_parts_rejected(spin_boson_params) -> None:
    """
    Test model without system parts rejected
    """
    with pytest.raises(PreconditionError):
        interaction_norms(spin_boson_model(spin_boson_params))


def test_uncoupled_bath_matches_bare_system() -> None:
    """
    Test uncoupled bath matches bare system
    """
    m = random_model(9, 3, 2, n_segments=2, time_dependent_system=True, interaction_scale=0.0)
    bare = without_bath(m)
    assert bare.bath_dims == (1,)
    g, g_bare = build_guessed_ensemble(m), build_guessed_ensemble(bare)
    np.testing.assert_allclose(g.rho_s_tilde.data, g_bare.rho_s_tilde.data, atol=1e-10)
    assert g_bare.guessed_heat == pytest.approx(0.0, abs=1e-14)
