"""
Example models with closed-form oracles, and random models for property sweeps
"""

from src.models.closed_system import closed_system_reduction_check, quench_model, without_bath
from src.models.random_models import check_total_dim, random_model, random_model_from
from src.models.schemas import (
    BosonMode,
    RandomModelParams,
    SpinBosonParams,
    TwoQubitDephasingParams,
)
from src.models.spin_boson import (
    continuum_decay_check,
    lab_frame_deviation,
    magnus_generator,
    magnus_trotter_deviation,
    ohmic_modes,
    spin_boson_analytic_heat,
    spin_boson_analytic_heat_flow,
    spin_boson_convergence,
    spin_boson_lab_hamiltonian,
    spin_boson_model,
)
from src.models.two_qubit import (
    two_qubit_analytic_heat,
    two_qubit_analytic_relative_entropy,
    two_qubit_dephasing_model,
)
