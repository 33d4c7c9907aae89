"""
Relations between the guessed quantum work and the two-point measurement work
"""
import math

import numpy as np

from src.core.config import settings
from src.otm.schemas import GuessedEnsemble, ThermalModel
from src.qcore.channels import evolve
from src.qcore.operators import identity, tensor
from src.qcore.spectral import evolution_operator
from src.thermo.gibbs import gibbs
from src.tpm.distribution import build_tpm_distribution, exact_work_expectation, require_common_beta
from src.tpm.schemas import DeviationReport, TpmDistribution


def _exact_state(m: ThermalModel) -> np.ndarray:
    tau_s = gibbs(m.h_s_initial, m.beta_s).state
    tau_b = gibbs(m.h_b, m.beta_b).state
    return evolve(evolution_operator(m.protocol), tensor(tau_s.op, tau_b.op).data)


def bath_energy_correction(m: ThermalModel, g: GuessedEnsemble) -> float:
    """
    Tr[(I ⊗ H_B)(Theta_SB(t) - U(tau_S(0) ⊗ tau_B)U†)]
    """
    h_b_full = tensor(identity(m.system_dims), m.h_b).data
    difference = g.theta_sb.data - _exact_state(m)
    return float(np.sum(h_b_full * difference.T).real)


def work_relation_residual(m: ThermalModel, g: GuessedEnsemble) -> float:
    """
    |<W~> - <W> - bath-energy correction|
    """
    require_common_beta(m)
    exact = exact_work_expectation(m)
    return abs(g.mean_guessed_work - exact - bath_energy_correction(m, g))


def deviation_inequalities(m: ThermalModel, g: GuessedEnsemble, d: TpmDistribution = None) -> DeviationReport:
    """
    <e^{-beta(W - <W~>)}> >= e^{D_full} >= e^{D_reduced} and <e^{-beta(W~ - <W>)}> >= e^{-D_full};
    the product of the two left sides is at least 1.
    """
    require_common_beta(m)
    d = build_tpm_distribution(m) if d is None else d
    beta = m.beta_s
    slack = settings.numerics.inequality_slack

    mean_w = d.mean_work()
    mean_w_tilde = g.mean_guessed_work
    lhs1 = float(np.sum(d.probabilities * np.exp(-beta * (d.works - mean_w_tilde))))

    probabilities = np.array([r.prob_initial for r in g.outcomes])
    w_tilde = np.array([r.delta_e_tilde for r in g.outcomes]) - g.guessed_heat
    lhs2 = float(np.sum(probabilities * np.exp(-beta * (w_tilde - mean_w))))

    bound1 = math.exp(g.relative_entropy_full)
    bound2 = math.exp(-g.relative_entropy_full)
    bound_reduced = math.exp(g.relative_entropy_reduced)
    product = lhs1 * lhs2
    return DeviationReport(
        lhs1=lhs1,
        lhs2=lhs2,
        bound1=bound1,
        bound2=bound2,
        bound_reduced=bound_reduced,
        product=product,
        ineq1_ok=lhs1 >= bound1 - slack * max(1.0, bound1),
        ineq2_ok=lhs2 >= bound2 - slack * max(1.0, bound2),
        product_ok=product >= 1.0 - slack,
        chain_ok=bound1 >= bound_reduced - slack * max(1.0, bound_reduced),
    )


def modified_vs_standard_residual(g: GuessedEnsemble, d: TpmDistribution) -> float:
    """
    Relative residual of <e^{-beta W~}> = <e^{-beta W}> e^{-D_full}
    """
    beta = d.beta
    probabilities = np.array([r.prob_initial for r in g.outcomes])
    w_tilde = np.array([r.delta_e_tilde for r in g.outcomes]) - g.guessed_heat
    modified = float(np.sum(probabilities * np.exp(-beta * w_tilde)))
    standard = float(np.sum(d.probabilities * np.exp(-beta * d.works)))
    expected = standard * math.exp(-g.relative_entropy_full)
    return abs(modified - expected) / expected
