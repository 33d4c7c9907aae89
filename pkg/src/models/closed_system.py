"""
Recovery of the closed-system results when system and bath never interact
"""
import math
from typing import Optional

import numpy as np

from src.core.config import settings
from src.core.exceptions import PreconditionError
from src.models.random_models import check_total_dim, random_hermitian
from src.models.schemas import ClosedSystemReport
from src.otm.ensemble import build_guessed_ensemble, exp_average_delta_e
from src.otm.schemas import GuessedEnsemble, ThermalModel
from src.qcore.operators import identity, tensor
from src.qcore.schemas import Operator, Protocol
from src.qcore.spectral import eig_hermitian, expm_unitary
from src.thermo.gibbs import gibbs_probabilities

INTERACTION_TOL = 1e-12


def interaction_norms(m: ThermalModel) -> list[float]:
    """
    max|V_k| per segment, V_k = G_k - H_S,k ⊗ I - I ⊗ H_B
    """
    if m.segment_system_hamiltonians is None:
        raise PreconditionError(f"Model '{m.label}' does not expose its per-segment system Hamiltonians")
    norms = []
    bath_identity = identity(m.bath_dims)
    system_identity = identity(m.system_dims)
    for segment, h_s in zip(m.protocol.segments, m.segment_system_hamiltonians):
        interaction = segment.generator - tensor(h_s, bath_identity) - tensor(system_identity, m.h_b)
        norms.append(interaction.max_abs())
    return norms


def closed_system_guessed_state(m: ThermalModel) -> np.ndarray:
    """
    sum_eps p(eps) U_S |eps><eps| U_S† built from the system propagator alone
    """
    u_s = np.eye(m.d_system, dtype=np.complex128)
    for segment, h_s in zip(m.protocol.segments, m.segment_system_hamiltonians):
        u_s = expm_unitary(h_s, segment.duration).data @ u_s
    spectrum = eig_hermitian(m.h_s_initial)
    evolved = u_s @ spectrum.eigenvectors
    # Tr[H_S(t) U_S |eps><eps| U_S†] per column
    energies = np.real(np.einsum("ik,ij,jk->k", evolved.conj(), m.h_s_final.data, evolved))
    weights = gibbs_probabilities(energies, m.beta_s)
    return (evolved * weights) @ evolved.conj().T


def closed_system_reduction_check(m: ThermalModel, g: Optional[GuessedEnsemble] = None) -> ClosedSystemReport:
    """
    With V = 0: no guessed heat, <W~> = <ΔE>, D_full = D_reduced, the guessed
    state from the system propagator alone, and the closed-system identity
    <e^{-beta ΔE}> = e^{-beta ΔF_S} e^{-D[rho~_S || tau_S(t)]}.
    """
    worst = max(interaction_norms(m), default=0.0)
    if worst > INTERACTION_TOL:
        raise PreconditionError(f"Model '{m.label}' has a system-bath interaction of size {worst:.3e}")

    g = build_guessed_ensemble(m) if g is None else g
    beta = m.beta_s
    guessed_state_residual = float(np.max(np.abs(g.rho_s_tilde.data - closed_system_guessed_state(m))))
    lhs = exp_average_delta_e(g, beta)
    rhs = math.exp(-beta * g.delta_f) * math.exp(-g.relative_entropy_reduced)
    jarzynski_residual = abs(lhs - rhs) / rhs

    report = ClosedSystemReport(
        guessed_heat=g.guessed_heat,
        work_minus_delta_e=g.mean_guessed_work - g.mean_delta_e,
        relative_entropy_gap=abs(g.relative_entropy_full - g.relative_entropy_reduced),
        guessed_state_residual=guessed_state_residual,
        jarzynski_residual=jarzynski_residual,
        passed=False,
    )
    passed = (
        abs(report.guessed_heat) <= 1e-10
        and abs(report.work_minus_delta_e) <= 1e-10
        and report.relative_entropy_gap <= settings.numerics.inequality_slack
        and guessed_state_residual <= 1e-10
        and jarzynski_residual <= settings.numerics.identity_rtol
    )
    return report.model_copy(update={"passed": passed})


def quench_model(seed: int, d_system: int = 3, d_bath: int = 2, t: float = 1.0, beta: float = 1.0) -> ThermalModel:
    """
    Sudden quench H_S(0) -> H_S(t) with an uncoupled bath; the post-quench
    Hamiltonian generates the evolution
    """
    check_total_dim(d_system, d_bath)
    rng = np.random.default_rng(seed)
    system_dims, bath_dims = (d_system,), (d_bath,)
    h_initial = random_hermitian(rng, system_dims)
    h_final = random_hermitian(rng, system_dims)
    h_b = random_hermitian(rng, bath_dims)
    generator = tensor(h_final, identity(bath_dims)) + tensor(identity(system_dims), h_b)
    segments = [(t, generator)] if t > 0 else []
    return ThermalModel(
        n_system_factors=1,
        protocol=Protocol.from_segments(segments, dims=system_dims + bath_dims),
        h_s_initial=h_initial,
        h_s_final=h_final,
        h_b=h_b,
        beta_s=beta,
        beta_b=beta,
        segment_system_hamiltonians=[h_final] if segments else [],
        label=f"quench[{seed}]",
    )


def without_bath(m: ThermalModel) -> ThermalModel:
    """
    Same system driving with the bath replaced by a single inert level
    """
    if m.segment_system_hamiltonians is None:
        raise PreconditionError(f"Model '{m.label}' does not expose its per-segment system Hamiltonians")
    trivial = Operator(dims=(1,), data=np.zeros((1, 1)))
    segments = [
        (segment.duration, tensor(h_s, identity((1,))))
        for segment, h_s in zip(m.protocol.segments, m.segment_system_hamiltonians)
    ]
    return ThermalModel(
        n_system_factors=m.n_system_factors,
        protocol=Protocol.from_segments(segments, dims=m.system_dims + (1,)),
        h_s_initial=m.h_s_initial,
        h_s_final=m.h_s_final,
        h_b=trivial,
        beta_s=m.beta_s,
        beta_b=m.beta_b,
        segment_system_hamiltonians=list(m.segment_system_hamiltonians),
        label=f"{m.label}/no-bath",
    )
