"""
Check that the guessed distribution maximizes the joint entropy under the mean-energy constraint
"""
import numpy as np
import scipy.linalg

from src.core.config import settings
from src.core.logging import get_logger
from src.otm.ensemble import guessed_state_for
from src.otm.schemas import GuessedEnsemble, MaxEntropyReport, ThermalModel
from src.qcore.spectral import eig_hermitian, evolution_operator
from src.thermo.entropy import von_neumann_entropy
from src.thermo.gibbs import gibbs


logger = get_logger(__name__)

MIN_OUTCOMES = 3


def constrained_directions(final_mean_energies: np.ndarray) -> np.ndarray:
    """
    Orthonormal basis (columns) of {δp : sum δp = 0, sum δp m(eps) = 0}
    """
    constraints = np.vstack([np.ones_like(final_mean_energies), final_mean_energies])
    return scipy.linalg.null_space(constraints)


def _largest_feasible_step(p: np.ndarray, direction: np.ndarray) -> float:
    negative = direction < 0
    if not np.any(negative):
        return 0.0
    return float(np.min(p[negative] / -direction[negative]))


def max_entropy_property_check(
    g: GuessedEnsemble,
    m: ThermalModel,
    n_perturbations: int,
    seed: int = 0,
) -> MaxEntropyReport:
    """
    Perturb p(eps) along random constraint-preserving directions and confirm
    S(Theta_SB[p + δp]) never exceeds S(Theta_SB[p]) by more than the slack.
    """
    n_outcomes = len(g.outcomes)
    if n_outcomes < MIN_OUTCOMES:
        notice = f"{n_outcomes} outcomes leave no feasible perturbation"
        logger.info("max_entropy_check_skipped", reason=notice)
        return MaxEntropyReport(passed=True, skipped=True, notice=notice)

    energies = np.array([r.final_mean_energy for r in g.outcomes])
    basis = constrained_directions(energies)
    if basis.shape[1] == 0:
        notice = "constraint set has no interior directions"
        logger.info("max_entropy_check_skipped", reason=notice)
        return MaxEntropyReport(passed=True, skipped=True, notice=notice)

    u = evolution_operator(m.protocol)
    bath_state = gibbs(m.h_b, m.beta_b).state
    spectrum = eig_hermitian(m.h_s_initial)
    p = np.array(g.p_guess)
    reference = von_neumann_entropy(g.theta_sb)
    slack = settings.numerics.inequality_slack

    rng = np.random.default_rng(seed)
    worst = -np.inf
    for _ in range(n_perturbations):
        direction = basis @ rng.standard_normal(basis.shape[1])
        step = rng.uniform(0.05, 1.0) * _largest_feasible_step(p, direction)
        perturbed = np.clip(p + step * direction, 0.0, None)
        perturbed /= perturbed.sum()
        theta = guessed_state_for(m, spectrum, perturbed, u=u, bath_state=bath_state)
        worst = max(worst, von_neumann_entropy(theta) - reference)

    passed = bool(worst <= slack)
    if not passed:
        logger.warning("max_entropy_check_failed", worst_increase=worst, slack=slack)
    return MaxEntropyReport(passed=passed, n_tested=n_perturbations, worst_increase=float(worst))
