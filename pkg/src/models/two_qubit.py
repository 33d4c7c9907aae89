"""
Two-qubit pure-dephasing model and its closed-form heat
"""
import math

from src.models.schemas import TwoQubitDephasingParams
from src.otm.schemas import ThermalModel
from src.qcore.operators import identity, pauli, tensor
from src.qcore.schemas import Protocol


def two_qubit_dephasing_model(p: TwoQubitDephasingParams) -> ThermalModel:
    """
    2 ⊗ 2 model with H = omega_s σ_z ⊗ I + omega_b I ⊗ σ_z + j σ_z ⊗ σ_x
    """
    sigma_z = pauli("z")
    h_s = sigma_z * p.omega_s
    h_b = sigma_z * p.omega_b
    coupling = tensor(sigma_z, pauli("x")) * p.j
    total = tensor(h_s, identity((2,))) + tensor(identity((2,)), h_b) + coupling

    segments = [(p.t, total)] if p.t > 0 else []
    return ThermalModel(
        n_system_factors=1,
        protocol=Protocol.from_segments(segments, dims=(2, 2)),
        h_s_initial=h_s,
        h_s_final=h_s,
        h_b=h_b,
        beta_s=p.beta,
        beta_b=p.bath_beta,
        segment_system_hamiltonians=[h_s] if segments else [],
        label="two_qubit_dephasing",
    )


def two_qubit_analytic_heat(p: TwoQubitDephasingParams) -> float:
    """
    -2 j^2 omega_b tanh(beta_B omega_b) sin^2(t Ω) / Ω^2 with Ω = sqrt(j^2 + omega_b^2)
    """
    omega_sq = p.j ** 2 + p.omega_b ** 2
    if omega_sq == 0:
        return 0.0
    rabi = math.sqrt(omega_sq)
    return -2 * p.j ** 2 * p.omega_b * math.tanh(p.bath_beta * p.omega_b) * math.sin(p.t * rabi) ** 2 / omega_sq


def two_qubit_analytic_relative_entropy(p: TwoQubitDephasingParams) -> float:
    """D[Theta || tau_S ⊗ tau_B] = -beta_B <Q~>_B; the system populations never change"""
    return -p.bath_beta * two_qubit_analytic_heat(p)
