"""
One-time measurement scheme: outcome ensemble, guessed state, guessed heat and work
"""

from src.otm.ensemble import (
    DEFAULT_ALPHA_IS_BETA,
    build_guessed_ensemble,
    build_outcome_ensemble,
    exp_average_delta_e,
    guessed_state_alpha,
    guessed_state_for,
)
from src.otm.identities import (
    guessed_heat_identity_residual,
    information_free_energy_relation,
    max_guessed_work_gap,
    mean_energy_change_residual,
    monotonicity_gap,
    partition_consistency_residual,
    stein_asymptotic_rate,
    theorem1_residual,
    theorem2_residual,
)
from src.otm.max_entropy import max_entropy_property_check
from src.otm.schemas import GuessedEnsemble, OutcomeRecord, ThermalModel
