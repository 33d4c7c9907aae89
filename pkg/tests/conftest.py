"""
Pytest configuration for the test suite
"""
import math
import os
from pathlib import Path
from typing import Callable

import pytest

# Set test environment
os.environ["ENV"] = "test"

from src.core.logging import setup_logging  # noqa: E402
from src.models.random_models import random_model  # noqa: E402
from src.models.schemas import BosonMode, SpinBosonParams, TwoQubitDephasingParams  # noqa: E402
from src.models.two_qubit import two_qubit_dephasing_model  # noqa: E402
from src.otm.ensemble import build_guessed_ensemble  # noqa: E402

# (J, omega_B, beta, t) at which the guessed heat is exactly -tanh(1)
TANH_POINT = TwoQubitDephasingParams(omega_b=1.0, j=1.0, beta=1.0, t=math.pi / (2 * math.sqrt(2)))

setup_logging()


@pytest.fixture
def make_random_model() -> Callable:
    """
    Factory for seeded random models with keyword overrides
    """
    def factory(seed: int = 0, d_system: int = 2, d_bath: int = 3, **kwargs):
        return random_model(seed, d_system, d_bath, **kwargs)
    return factory


@pytest.fixture
def driven_model(make_random_model):
    """2 ⊗ 3 model with two segments and a redrawn system Hamiltonian"""
    return make_random_model(seed=7, n_segments=2, time_dependent_system=True)


@pytest.fixture
def two_qubit_params() -> TwoQubitDephasingParams:
    return TANH_POINT


@pytest.fixture
def two_qubit_model(two_qubit_params):
    return two_qubit_dephasing_model(two_qubit_params)


@pytest.fixture
def two_qubit_ensemble(two_qubit_model):
    return build_guessed_ensemble(two_qubit_model)


@pytest.fixture
def spin_boson_params() -> SpinBosonParams:
    """Single mode at omega = 1, g = 0.1, t = pi, beta = 2 with its validated cutoff"""
    return SpinBosonParams.validated(omega0=1.0, modes=[BosonMode(omega=1.0, g=0.1)], beta=2.0, t=math.pi)


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[[str], Path]:
    """
    Write TOML text to a temporary file and return its path
    """
    def writer(text: str, name: str = "run.toml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return writer
