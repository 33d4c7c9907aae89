"""
Exhaustive two-point measurement work statistics on system and bath
"""
import numpy as np

from src.core.config import settings
from src.core.exceptions import DimensionError, PreconditionError
from src.core.logging import get_logger
from src.otm.schemas import ThermalModel
from src.qcore.channels import evolve
from src.qcore.operators import identity, tensor
from src.qcore.spectral import eig_hermitian, evolution_operator
from src.thermo.gibbs import gibbs, gibbs_probabilities
from src.tpm.schemas import TpmDistribution, TpmTrajectory


logger = get_logger(__name__)


def require_common_beta(m: ThermalModel) -> None:
    if not m.same_temperature:
        raise PreconditionError(
            f"Two-point measurement comparison needs a common beta (got {m.beta_s!r}, {m.beta_b!r})"
        )


def build_tpm_distribution(m: ThermalModel) -> TpmDistribution:
    """
    Enumerate all d_S^2 d_B^2 trajectories, ordered by (eps, q, eps', q')
    """
    require_common_beta(m)
    max_dim = settings.numerics.tpm_max_dim
    if m.total_dim > max_dim:
        raise DimensionError(
            f"Total dimension {m.total_dim} exceeds the exhaustive enumeration limit {max_dim}"
        )
    beta = m.beta_s
    u = evolution_operator(m.protocol)
    initial = eig_hermitian(m.h_s_initial)
    final = eig_hermitian(m.h_s_final)
    bath = eig_hermitian(m.h_b)

    basis_in = np.kron(initial.eigenvectors, bath.eigenvectors)
    basis_out = np.kron(final.eigenvectors, bath.eigenvectors)
    # amplitudes[(eps', q'), (eps, q)]
    amplitudes = basis_out.conj().T @ u.data @ basis_in
    transition = np.abs(amplitudes) ** 2

    p_initial = np.kron(
        gibbs_probabilities(initial.eigenvalues, beta),
        gibbs_probabilities(bath.eigenvalues, beta),
    )
    energy_in = np.add.outer(initial.eigenvalues, bath.eigenvalues).reshape(-1)
    energy_out = np.add.outer(final.eigenvalues, bath.eigenvalues).reshape(-1)

    d_bath = m.d_bath
    trajectories = []
    for a, e_in in enumerate(energy_in):
        eps, q = initial.eigenvalues[a // d_bath], bath.eigenvalues[a % d_bath]
        for b, e_out in enumerate(energy_out):
            trajectories.append(
                TpmTrajectory(
                    epsilon=float(eps),
                    q=float(q),
                    epsilon_prime=float(final.eigenvalues[b // d_bath]),
                    q_prime=float(bath.eigenvalues[b % d_bath]),
                    probability=float(p_initial[a] * transition[b, a]),
                    work=float(e_out - e_in),
                )
            )
    logger.debug("tpm_distribution_built", model=m.label, trajectories=len(trajectories))
    return TpmDistribution(trajectories=trajectories, beta=beta)


def standard_jarzynski_average(d: TpmDistribution, beta: float) -> float:
    """<e^{-beta W}> over the two-point measurement distribution"""
    return float(np.sum(d.probabilities * np.exp(-beta * d.works)))


def exact_work_expectation(m: ThermalModel) -> float:
    """
    Total energy change Tr[(H_S(t) + H_B) rho(t)] - Tr[(H_S(0) + H_B) rho(0)]
    """
    require_common_beta(m)
    tau_s = gibbs(m.h_s_initial, m.beta_s).state
    tau_b = gibbs(m.h_b, m.beta_b).state
    initial = tensor(tau_s.op, tau_b.op).data
    evolved = evolve(evolution_operator(m.protocol), initial)

    h_final = tensor(m.h_s_final, identity(m.bath_dims)) + tensor(identity(m.system_dims), m.h_b)
    h_initial = tensor(m.h_s_initial, identity(m.bath_dims)) + tensor(identity(m.system_dims), m.h_b)
    # Tr[A B] = sum_ij A_ij B_ji
    final_energy = np.sum(h_final.data * evolved.T).real
    initial_energy = np.sum(h_initial.data * initial.T).real
    return float(final_energy - initial_energy)
