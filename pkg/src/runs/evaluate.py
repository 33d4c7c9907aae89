"""
Evaluate one model into a flat result row
"""
import math
from typing import Any, Dict, List, Optional, Union

from src.core.config import settings
from src.core.logging import get_logger
from src.models.closed_system import closed_system_reduction_check, interaction_norms
from src.models.schemas import SpinBosonParams, TwoQubitDephasingParams
from src.models.spin_boson import spin_boson_analytic_heat
from src.models.two_qubit import two_qubit_analytic_heat, two_qubit_analytic_relative_entropy
from src.otm.ensemble import build_guessed_ensemble, exp_average_delta_e
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
from src.otm.schemas import GuessedEnsemble, ThermalModel
from src.tpm.distribution import build_tpm_distribution, standard_jarzynski_average
from src.tpm.relations import deviation_inequalities, work_relation_residual


logger = get_logger(__name__)

RESULT_COLUMNS: List[str] = [
    "label",
    "total_dim",
    "degenerate_initial_spectrum",
    "mean_delta_e",
    "guessed_heat",
    "guessed_work",
    "z_tilde",
    "log_z_tilde",
    "f_tilde",
    "delta_f",
    "d_full",
    "d_reduced",
    "exp_average_delta_e",
    "jarzynski1_residual",
    "mean_energy_residual",
    "heat_identity_residual",
    "info_free_energy_residual",
    "theorem1_lhs",
    "theorem1_rhs",
    "theorem1_residual",
    "theorem2_residual",
    "work_bound_gap",
    "gap_full",
    "gap_reduced",
    "work_bound_violation",
    "monotonicity_gap",
    "monotonicity_violation",
    "stein_rate",
    "tpm_mean_work",
    "tpm_jarzynski_residual",
    "work_relation_residual",
    "deviation_lhs1",
    "deviation_lhs2",
    "deviation_product",
    "deviation_violation",
    "analytic_heat",
    "oracle_heat_error",
    "oracle_entropy_error",
    "closed_guessed_state_residual",
    "closed_jarzynski_residual",
]


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _relative_error(numeric: float, exact: float) -> float:
    """Relative where the reference is resolvable, absolute otherwise"""
    if abs(exact) > 1e-12:
        return abs(numeric - exact) / abs(exact)
    return abs(numeric - exact)


def _otm_columns(m: ThermalModel, g: GuessedEnsemble) -> Dict[str, Any]:
    t2 = theorem2_residual(m, g)
    row: Dict[str, Any] = {
        "label": m.label,
        "total_dim": m.total_dim,
        "degenerate_initial_spectrum": g.degenerate_initial_spectrum,
        "mean_delta_e": g.mean_delta_e,
        "guessed_heat": g.guessed_heat,
        "guessed_work": g.mean_guessed_work,
        "z_tilde": g.z_tilde,
        "log_z_tilde": g.log_z_tilde,
        "f_tilde": g.f_tilde,
        "delta_f": g.delta_f,
        "d_full": g.relative_entropy_full,
        "d_reduced": g.relative_entropy_reduced,
        "exp_average_delta_e": exp_average_delta_e(g, m.beta_s),
        "jarzynski1_residual": partition_consistency_residual(g),
        "mean_energy_residual": mean_energy_change_residual(g, m),
        "info_free_energy_residual": information_free_energy_relation(g),
        "theorem2_residual": t2.residual,
        "work_bound_gap": t2.work_bound_gap,
        "monotonicity_gap": monotonicity_gap(g),
        "monotonicity_violation": max(0.0, -monotonicity_gap(g)),
        "stein_rate": stein_asymptotic_rate(g).rate,
        "work_bound_violation": max(0.0, -t2.work_bound_gap),
    }
    if m.same_temperature:
        t1 = theorem1_residual(g, m)
        gaps = max_guessed_work_gap(g, m)
        row.update(
            heat_identity_residual=guessed_heat_identity_residual(g, m),
            theorem1_lhs=t1.lhs,
            theorem1_rhs=t1.rhs,
            theorem1_residual=t1.residual,
            gap_full=gaps.gap_full,
            gap_reduced=gaps.gap_reduced,
            work_bound_violation=max(0.0, -gaps.gap_full, -gaps.gap_reduced),
        )
    return row


def _tpm_columns(m: ThermalModel, g: GuessedEnsemble) -> Dict[str, Any]:
    if not m.same_temperature or m.total_dim > settings.numerics.tpm_max_dim:
        return {}
    d = build_tpm_distribution(m)
    expected = math.exp(-m.beta_s * g.delta_f)
    deviation = deviation_inequalities(m, g, d)
    deficit = max(
        0.0,
        (deviation.bound1 - deviation.lhs1) / max(1.0, deviation.bound1),
        (deviation.bound2 - deviation.lhs2) / max(1.0, deviation.bound2),
        (deviation.bound_reduced - deviation.bound1) / max(1.0, deviation.bound_reduced),
        1.0 - deviation.product,
    )
    return {
        "tpm_mean_work": d.mean_work(),
        "tpm_jarzynski_residual": abs(standard_jarzynski_average(d, m.beta_s) - expected) / expected,
        "work_relation_residual": work_relation_residual(m, g),
        "deviation_lhs1": deviation.lhs1,
        "deviation_lhs2": deviation.lhs2,
        "deviation_product": deviation.product,
        "deviation_violation": deficit,
    }


def _closed_columns(m: ThermalModel, g: GuessedEnsemble) -> Dict[str, Any]:
    if m.segment_system_hamiltonians is None:
        return {}
    if max(interaction_norms(m), default=0.0) > 1e-12:
        return {}
    report = closed_system_reduction_check(m, g)
    return {
        "closed_guessed_state_residual": report.guessed_state_residual,
        "closed_jarzynski_residual": report.jarzynski_residual,
    }


OracleParams = Union[TwoQubitDephasingParams, SpinBosonParams]


def evaluate_model(m: ThermalModel, oracle: Optional[OracleParams] = None) -> Dict[str, Any]:
    """
    Every applicable quantity for one model; inapplicable columns are left out.

    `oracle` is the model's parameter object when a closed form exists.
    """
    g = build_guessed_ensemble(m)
    row = _otm_columns(m, g)
    row.update(_tpm_columns(m, g))
    row.update(_closed_columns(m, g))

    if isinstance(oracle, TwoQubitDephasingParams):
        heat = two_qubit_analytic_heat(oracle)
        entropy = two_qubit_analytic_relative_entropy(oracle)
        row.update(
            analytic_heat=heat,
            oracle_heat_error=_relative_error(g.guessed_heat, heat),
            oracle_entropy_error=_relative_error(g.relative_entropy_full, entropy),
        )
    elif isinstance(oracle, SpinBosonParams):
        heat = spin_boson_analytic_heat(oracle)
        row.update(analytic_heat=heat, oracle_heat_error=_relative_error(g.guessed_heat, heat))

    return {
        key: float(value) if _is_number(value) and key != "total_dim" else value
        for key, value in row.items()
    }
