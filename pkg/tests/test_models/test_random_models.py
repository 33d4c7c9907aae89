"""
Tests for seeded random models
"""
import numpy as np
import pytest

from src.core.exceptions import ParameterError
from src.models.random_models import random_hermitian, random_model, random_model_from
from src.models.schemas import RandomModelParams


def test_same_seed_same_model() -> None:
    """
    Test same seed same model
    """
    a = random_model(5, 2, 3, n_segments=3, time_dependent_system=True)
    b = random_model(5, 2, 3, n_segments=3, time_dependent_system=True)
    for sa, sb in zip(a.protocol.segments, b.protocol.segments):
        assert sa.duration == sb.duration
        np.testing.assert_array_equal(sa.generator.data, sb.generator.data)
    assert a.label == "random[5]"


def test_segment_durations_and_system_parts() -> None:
    """
    Test segment durations and system parts
    """
    m = random_model(2, 3, 2, n_segments=3, time_dependent_system=True)
    assert len(m.protocol.segments) == 3
    assert len(m.segment_system_hamiltonians) == 3
    assert all(0.2 <= s.duration <= 1.0 for s in m.protocol.segments)
    np.testing.assert_array_equal(m.h_s_final.data, m.segment_system_hamiltonians[-1].data)


def test_static_system_keeps_hamiltonian() -> None:
    """
    Test static system keeps hamiltonian
    """
    m = random_model(2, 2, 2, n_segments=2)
    np.testing.assert_array_equal(m.h_s_initial.data, m.h_s_final.data)


@pytest.mark.parametrize("d_system,d_bath", [(1, 1), (16, 17)])
def test_dimension_range(d_system, d_bath) -> None:
    """
    Test dimension range
    """
    with pytest.raises(ParameterError):
        random_model(0, d_system, d_bath)


def test_random_hermitian_is_hermitian() -> None:
    """
    Test random hermitian is hermitian
    """
    h = random_hermitian(np.random.default_rng(0), (2, 2), scale=3.0)
    assert h.is_hermitian()


def test_two_temperature_default() -> None:
    """
    Test two temperature default
    """
    assert random_model(0, 2, 2, beta_s=0.7).beta_b == 0.7
    assert random_model(0, 2, 2, beta_s=0.7, beta_b=1.5).beta_b == 1.5


def test_from_params() -> None:
    """
    Test from params
    """
    m = random_model_from(RandomModelParams(seed=3, d_system=2, d_bath=2))
    assert m.label == "random[3]"
