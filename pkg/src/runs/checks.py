"""
Registry of named verifications evaluated over result rows
"""
import math
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel

from src.core.config import settings
from src.core.exceptions import CheckFailure
from src.core.logging import get_logger


logger = get_logger(__name__)


class CheckSpec(BaseModel):
    """
    Each (column, tolerance) limit must hold on every row where the column is present
    """
    name: str
    description: str
    limits: List[Tuple[str, float]]


class CheckOutcome(BaseModel):
    name: str
    column: Optional[str]
    worst: float
    tolerance: float
    rows_checked: int
    passed: bool


def _registry() -> Dict[str, CheckSpec]:
    numerics = settings.numerics
    checks = [
        CheckSpec(name="theorem1", description="guessed-work Jarzynski identity",
                  limits=[("theorem1_residual", numerics.identity_rtol)]),
        CheckSpec(name="heat_identity", description="relative entropy vs guessed heat",
                  limits=[("heat_identity_residual", numerics.identity_rtol)]),
        CheckSpec(name="jarzynski1", description="<e^{-beta ΔE}> Z_S(0) = Z~",
                  limits=[("jarzynski1_residual", 1e-10)]),
        CheckSpec(name="mean_energy", description="<ΔE> from outcomes vs channel on tau_S(0)",
                  limits=[("mean_energy_residual", 1e-10)]),
        CheckSpec(name="max_work", description="guessed work above both free-energy bounds",
                  limits=[("work_bound_violation", numerics.inequality_slack)]),
        CheckSpec(name="monotonicity", description="D_full >= D_reduced",
                  limits=[("monotonicity_violation", numerics.inequality_slack)]),
        CheckSpec(name="theorem2", description="two-temperature identity",
                  limits=[("theorem2_residual", numerics.identity_rtol)]),
        CheckSpec(name="tpm_jarzynski", description="standard Jarzynski equality",
                  limits=[("tpm_jarzynski_residual", numerics.identity_rtol)]),
        CheckSpec(name="work_relation", description="<W~> - <W> = bath-energy difference",
                  limits=[("work_relation_residual", numerics.inequality_slack)]),
        CheckSpec(name="deviation", description="deviation inequalities and their product",
                  limits=[("deviation_violation", numerics.inequality_slack)]),
        CheckSpec(name="two_qubit_oracle", description="closed-form two-qubit heat and D",
                  limits=[("oracle_heat_error", 1e-8), ("oracle_entropy_error", 1e-8)]),
        CheckSpec(name="spin_boson_oracle", description="analytic spin-boson heat",
                  limits=[("oracle_heat_error", 1e-3)]),
        CheckSpec(name="closed_system", description="closed-system recovery",
                  limits=[("closed_guessed_state_residual", 1e-10),
                          ("closed_jarzynski_residual", numerics.identity_rtol)]),
    ]
    return {check.name: check for check in checks}


CHECKS: Dict[str, CheckSpec] = _registry()


def evaluate_check(name: str, rows: Sequence[Mapping[str, object]]) -> CheckOutcome:
    """
    Worst value of each limited column over the rows; a check no row covers fails
    """
    check = CHECKS[name]
    worst_outcome: Optional[CheckOutcome] = None
    for column, tolerance in check.limits:
        values = [row[column] for row in rows if isinstance(row.get(column), float)]
        if not values:
            continue
        worst = max(values, key=lambda v: math.inf if math.isnan(v) else v)
        outcome = CheckOutcome(
            name=name,
            column=column,
            worst=worst,
            tolerance=tolerance,
            rows_checked=len(values),
            passed=bool(worst <= tolerance),
        )
        if worst_outcome is None or (worst_outcome.passed and not outcome.passed):
            worst_outcome = outcome
    if worst_outcome is None:
        return CheckOutcome(name=name, column=None, worst=math.nan, tolerance=check.limits[0][1],
                            rows_checked=0, passed=False)
    return worst_outcome


def enforce_checks(names: Sequence[str], rows: Sequence[Mapping[str, object]]) -> List[CheckOutcome]:
    """
    Evaluate every requested check; raise CheckFailure naming the worst failing one
    """
    outcomes = [evaluate_check(name, rows) for name in names]
    for outcome in outcomes:
        logger.info("check_evaluated", **outcome.model_dump())
    failed = [o for o in outcomes if not o.passed]
    if failed:
        worst = max(failed, key=lambda o: math.inf if math.isnan(o.worst) else o.worst / o.tolerance)
        logger.error("check_failed", check=worst.name, column=worst.column, worst=worst.worst)
        raise CheckFailure(worst.name if worst.column is None else f"{worst.name}:{worst.column}",
                           worst.worst, worst.tolerance)
    return outcomes
