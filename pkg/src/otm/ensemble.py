"""
Outcome ensemble, modified partition function and guessed state of the one-time measurement scheme
"""
import math
from typing import Sequence, Union

import numpy as np
from scipy.special import logsumexp

from src.core.logging import get_logger
from src.otm.schemas import GuessedEnsemble, OutcomeRecord, ThermalModel
from src.qcore.channels import apply_channel, evolve
from src.qcore.operators import identity, partial_trace_bath, tensor
from src.qcore.schemas import DensityOperator, Operator, Spectrum
from src.qcore.spectral import eig_hermitian, evolution_operator
from src.thermo.entropy import energy_expectation, relative_entropy_to_gibbs
from src.thermo.gibbs import gibbs, gibbs_probabilities


logger = get_logger(__name__)

# Lagrange multiplier of the mean-energy constraint; the guessed state is
# always built with alpha = beta_S.
DEFAULT_ALPHA_IS_BETA = True


def _outcomes_of(ensemble: Union[GuessedEnsemble, Sequence[OutcomeRecord]]) -> Sequence[OutcomeRecord]:
    if isinstance(ensemble, GuessedEnsemble):
        return ensemble.outcomes
    return ensemble


def build_outcome_ensemble(m: ThermalModel) -> list[OutcomeRecord]:
    """
    One record per eigenvector of H_S(0), in ascending-energy order
    """
    u = evolution_operator(m.protocol)
    tau_b = gibbs(m.h_b, m.beta_b)
    spectrum = eig_hermitian(m.h_s_initial)
    probabilities = gibbs_probabilities(spectrum.eigenvalues, m.beta_s)

    records = []
    for i, epsilon in enumerate(spectrum.eigenvalues):
        projector = DensityOperator.pure(spectrum.vector(i), dims=m.system_dims)
        evolved = apply_channel(u, tau_b.state, projector)
        final_mean = energy_expectation(m.h_s_final, evolved)
        records.append(
            OutcomeRecord(
                index=i,
                epsilon=float(epsilon),
                prob_initial=float(probabilities[i]),
                evolved_state=evolved,
                final_mean_energy=final_mean,
                delta_e_tilde=final_mean - float(epsilon),
            )
        )
    return records


def exp_average_delta_e(ensemble: Union[GuessedEnsemble, Sequence[OutcomeRecord]], beta_s: float) -> float:
    """
    <e^{-beta ΔE}> over the outcome distribution
    """
    outcomes = _outcomes_of(ensemble)
    probabilities = np.array([r.prob_initial for r in outcomes])
    delta_e = np.array([r.delta_e_tilde for r in outcomes])
    return float(np.sum(probabilities * np.exp(-beta_s * delta_e)))


def guessed_state_for(
    m: ThermalModel,
    spectrum: Spectrum,
    weights: Sequence[float],
    u: Operator = None,
    bath_state: DensityOperator = None,
) -> DensityOperator:
    """
    Theta_SB[p] = U (sum_eps p(eps) |eps><eps| ⊗ rho_B) U† for an arbitrary distribution p
    """
    u = evolution_operator(m.protocol) if u is None else u
    bath_state = gibbs(m.h_b, m.beta_b).state if bath_state is None else bath_state
    v = spectrum.eigenvectors
    system_mix = Operator(dims=m.system_dims, data=(v * np.asarray(weights, dtype=float)) @ v.conj().T)
    joint = tensor(system_mix, bath_state.op)
    return DensityOperator.from_matrix(evolve(u, joint.data), u.dims)


def guessed_state_alpha(m: ThermalModel, alpha: float) -> DensityOperator:
    """
    Member of the guessed-state family p_alpha(eps) ∝ e^{-alpha m(eps)}.

    Inspection helper only; the ensemble itself uses alpha = beta_S.
    """
    records = build_outcome_ensemble(m)
    energies = np.array([r.final_mean_energy for r in records])
    weights = gibbs_probabilities(energies, alpha)
    return guessed_state_for(m, eig_hermitian(m.h_s_initial), weights)


def build_guessed_ensemble(m: ThermalModel) -> GuessedEnsemble:
    """
    Modified partition function, maximum-entropy guessed state and the guessed heat
    """
    records = build_outcome_ensemble(m)
    energies = np.array([r.final_mean_energy for r in records])
    log_z_tilde = float(logsumexp(-m.beta_s * energies))
    p_guess = gibbs_probabilities(energies, m.beta_s)

    u = evolution_operator(m.protocol)
    tau_b = gibbs(m.h_b, m.beta_b)
    spectrum = eig_hermitian(m.h_s_initial)
    theta = guessed_state_for(m, spectrum, p_guess, u=u, bath_state=tau_b.state)
    reduced = partial_trace_bath(theta.op, m.n_system_factors)
    rho_s_tilde = DensityOperator.from_matrix(reduced.data, reduced.dims)

    tau_s_initial = gibbs(m.h_s_initial, m.beta_s)
    tau_s_final = gibbs(m.h_s_final, m.beta_s)
    bath_energy_initial = energy_expectation(m.h_b, tau_b.state)
    bath_energy_guessed = energy_expectation(tensor(identity(m.system_dims), m.h_b), theta)
    guessed_heat = bath_energy_initial - bath_energy_guessed

    d_full = relative_entropy_to_gibbs(theta, tau_s_final, tau_b)
    d_reduced = relative_entropy_to_gibbs(rho_s_tilde, tau_s_final)
    mean_delta_e = float(sum(r.prob_initial * r.delta_e_tilde for r in records))

    try:
        z_tilde = math.exp(log_z_tilde)
    except OverflowError:
        z_tilde = math.inf

    ensemble = GuessedEnsemble(
        outcomes=records,
        beta_s=m.beta_s,
        beta_b=m.beta_b,
        z_tilde=z_tilde,
        log_z_tilde=log_z_tilde,
        f_tilde=-log_z_tilde / m.beta_s,
        p_guess=[float(p) for p in p_guess],
        theta_sb=theta,
        rho_s_tilde=rho_s_tilde,
        guessed_heat=guessed_heat,
        relative_entropy_full=d_full,
        relative_entropy_reduced=d_reduced,
        log_z_s_initial=tau_s_initial.log_partition_function,
        log_z_s_final=tau_s_final.log_partition_function,
        free_energy_initial=tau_s_initial.free_energy,
        free_energy_final=tau_s_final.free_energy,
        mean_delta_e=mean_delta_e,
        bath_energy_initial=bath_energy_initial,
        bath_energy_guessed=bath_energy_guessed,
        degenerate_initial_spectrum=spectrum.degenerate,
    )
    logger.debug(
        "guessed_ensemble_built",
        model=m.label,
        outcomes=len(records),
        guessed_heat=guessed_heat,
        d_full=d_full,
    )
    return ensemble
