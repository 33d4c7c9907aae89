"""
Gibbs states, partition functions and free energies
"""
import math

import numpy as np
from scipy.special import logsumexp

from src.core.exceptions import ParameterError
from src.qcore.schemas import DensityOperator, Operator
from src.qcore.spectral import eig_hermitian
from src.thermo.schemas import GibbsState


def _check_beta(beta: float) -> None:
    if not beta > 0 or not math.isfinite(beta):
        raise ParameterError(f"Inverse temperature must be positive and finite, got {beta!r}")


def _shifted_log_sum(energies: np.ndarray, beta: float) -> float:
    """ln sum_i e^{-beta (E_i - E_min)}"""
    return float(logsumexp(-beta * (energies - np.min(energies))))


def log_partition_function(energies: np.ndarray, beta: float) -> float:
    """ln sum_i e^{-beta E_i}, shifted by the smallest energy"""
    _check_beta(beta)
    energies = np.asarray(energies, dtype=np.float64)
    return -beta * float(np.min(energies)) + _shifted_log_sum(energies, beta)


def gibbs(h: Operator, beta: float) -> GibbsState:
    """
    Thermal state of `h` at inverse temperature `beta`.

    `log_partition_function` is authoritative; `partition_function` saturates
    to the smallest positive float or to inf when e^{-beta E_min} leaves the
    float range.
    """
    _check_beta(beta)
    spectrum = eig_hermitian(h)
    energies = spectrum.eigenvalues
    shifted = energies - energies[0]
    log_z_shifted = _shifted_log_sum(energies, beta)
    log_z = log_partition_function(energies, beta)
    log_probabilities = -beta * shifted - log_z_shifted
    probabilities = np.exp(log_probabilities)

    v = spectrum.eigenvectors
    state = DensityOperator.from_matrix((v * probabilities) @ v.conj().T, h.dims)
    log_state = Operator(dims=h.dims, data=(v * log_probabilities) @ v.conj().T)
    try:
        z = max(math.exp(log_z), math.ulp(0.0))
    except OverflowError:
        z = math.inf

    return GibbsState(
        state=state,
        partition_function=z,
        log_partition_function=log_z,
        free_energy=-log_z / beta,
        beta=beta,
        log_state=log_state,
        spectrum=spectrum,
    )


def free_energy(h: Operator, beta: float) -> float:
    return gibbs(h, beta).free_energy


def free_energy_difference(h_initial: Operator, h_final: Operator, beta: float) -> float:
    """
    F(h_final) - F(h_initial) at a common inverse temperature
    """
    return free_energy(h_final, beta) - free_energy(h_initial, beta)


def gibbs_probabilities(energies: np.ndarray, beta: float) -> np.ndarray:
    """Normalized Boltzmann weights with a min-energy shift against overflow"""
    _check_beta(beta)
    energies = np.asarray(energies, dtype=np.float64)
    weights = np.exp(-beta * (energies - np.min(energies)))
    return weights / np.sum(weights)
