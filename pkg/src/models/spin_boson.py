"""
Spin-boson pure-dephasing model on a truncated Fock space
"""
import math
from typing import List, Optional, Sequence

import numpy as np

from src.core.logging import get_logger
from src.models.schemas import BosonMode, ContinuumDecayReport, ConvergenceReport, SpinBosonParams, displacement
from src.otm.ensemble import build_guessed_ensemble, exp_average_delta_e
from src.otm.schemas import ThermalModel
from src.qcore.channels import evolve
from src.qcore.operators import annihilation, embed, identity, pauli, tensor
from src.qcore.schemas import Operator, Protocol
from src.qcore.spectral import expm_unitary, propagator
from src.thermo.gibbs import gibbs


logger = get_logger(__name__)


def _dims(p: SpinBosonParams) -> tuple:
    return (2,) + tuple(p.levels)


def _lowering_operators(p: SpinBosonParams) -> List[Operator]:
    """a_k on the bath factors only"""
    levels = tuple(p.levels)
    return [embed(annihilation(n), k, levels) for k, n in enumerate(levels)]


def _system_hamiltonian(p: SpinBosonParams) -> Operator:
    return pauli("z") * (p.omega0 / 2)


def _bath_hamiltonian(p: SpinBosonParams) -> Operator:
    levels = tuple(p.levels)
    h_b = Operator(dims=levels, data=np.zeros((int(np.prod(levels)),) * 2))
    for mode, a in zip(p.modes, _lowering_operators(p)):
        h_b = h_b + (a.dagger() @ a) * mode.omega
    return h_b


def _coupled(p: SpinBosonParams, amplitudes: Sequence[complex]) -> Operator:
    """σ_z ⊗ sum_k (c_k a_k + c_k* a_k†)"""
    levels = tuple(p.levels)
    field = Operator(dims=levels, data=np.zeros((int(np.prod(levels)),) * 2))
    for c, a in zip(amplitudes, _lowering_operators(p)):
        field = field + a * c + a.dagger() * c.conjugate()
    return tensor(pauli("z"), field)


def phase_integral(mode: BosonMode, t: float) -> float:
    """𝒢_k(t) = |g_k|^2 / omega_k (1 - sin(omega_k t) / (omega_k t))"""
    x = mode.omega * t
    if x == 0:
        return 0.0
    return abs(mode.g) ** 2 / mode.omega * (1 - math.sin(x) / x)


def magnus_generator(p: SpinBosonParams) -> Operator:
    """
    H0 + H1 such that exp(-i t (H0 + H1)) is the interaction-picture propagator:
    H0 = σ_z sum_k (G_k a_k + G_k* a_k†), H1 = -sum_k 𝒢_k
    """
    h0 = _coupled(p, [displacement(mode, p.t) for mode in p.modes])
    offset = sum(phase_integral(mode, p.t) for mode in p.modes)
    return h0 - identity(h0.dims) * offset


def interaction_picture_hamiltonian(p: SpinBosonParams, s: float) -> Operator:
    """σ_z sum_k (g_k a_k e^{-i omega_k s} + h.c.)"""
    return _coupled(p, [mode.g * complex(math.cos(mode.omega * s), -math.sin(mode.omega * s)) for mode in p.modes])


def spin_boson_lab_hamiltonian(p: SpinBosonParams) -> Operator:
    """
    (omega0/2) σ_z + sum_k omega_k a_k† a_k + σ_z sum_k (g_k a_k + g_k* a_k†)
    """
    free = tensor(_system_hamiltonian(p), identity(p.levels)) + tensor(identity((2,)), _bath_hamiltonian(p))
    return free + _coupled(p, [mode.g for mode in p.modes])


def spin_boson_model(p: SpinBosonParams) -> ThermalModel:
    """
    Interaction-picture model: a single segment generated by the Magnus generator
    """
    h_s = _system_hamiltonian(p)
    segments = [(p.t, magnus_generator(p))] if p.t > 0 else []
    return ThermalModel(
        n_system_factors=1,
        protocol=Protocol.from_segments(segments, dims=_dims(p)),
        h_s_initial=h_s,
        h_s_final=h_s,
        h_b=_bath_hamiltonian(p),
        beta_s=p.beta,
        beta_b=p.beta,
        label="spin_boson",
    )


def _analytic_heat(modes: Sequence[BosonMode], t: float) -> float:
    total = 0.0
    for mode in modes:
        half = mode.omega / 2
        total += mode.omega * abs(mode.g) ** 2 * (math.sin(half * t) / half) ** 2
    return -total


def spin_boson_analytic_heat(p: SpinBosonParams) -> float:
    """
    <Q~>_B = -sum_k omega_k |g_k|^2 (sin(omega_k t / 2) / (omega_k / 2))^2
    """
    return _analytic_heat(p.modes, p.t)


def spin_boson_analytic_heat_flow(modes: Sequence[BosonMode], t: float) -> float:
    """d<Q~>_B/dt = -sum_k 2 |g_k|^2 sin(omega_k t)"""
    return -sum(2 * abs(mode.g) ** 2 * math.sin(mode.omega * t) for mode in modes)


def _initial_product_state(p: SpinBosonParams) -> np.ndarray:
    """|+><+| ⊗ tau_B, probing both the populations and the branch coherence"""
    plus = np.full((2, 2), 0.5, dtype=np.complex128)
    tau_b = gibbs(_bath_hamiltonian(p), p.beta).state
    return np.kron(plus, tau_b.data)


def magnus_trotter_deviation(p: SpinBosonParams, n_steps: int = 1000) -> float:
    """
    Max-norm distance between the Magnus-evolved state and a midpoint
    piecewise-constant evolution under the interaction-picture Hamiltonian
    """
    if p.t <= 0:
        return 0.0
    dt = p.t / n_steps
    steps = [(dt, interaction_picture_hamiltonian(p, (i + 0.5) * dt)) for i in range(n_steps)]
    stepped = propagator(Protocol.from_segments(steps, dims=_dims(p)))
    magnus = expm_unitary(magnus_generator(p), p.t)
    rho = _initial_product_state(p)
    deviation = float(np.max(np.abs(evolve(stepped, rho) - evolve(magnus, rho))))
    logger.debug("magnus_trotter_deviation", n_steps=n_steps, deviation=deviation)
    return deviation


def lab_frame_deviation(p: SpinBosonParams) -> float:
    """
    Max-norm distance between lab-frame evolution and e^{-i H_free t} times the Magnus propagator
    """
    free = tensor(_system_hamiltonian(p), identity(p.levels)) + tensor(identity((2,)), _bath_hamiltonian(p))
    lab = expm_unitary(spin_boson_lab_hamiltonian(p), p.t)
    via_magnus = expm_unitary(free, p.t) @ expm_unitary(magnus_generator(p), p.t)
    rho = _initial_product_state(p)
    return float(np.max(np.abs(evolve(lab, rho) - evolve(via_magnus, rho))))


def spin_boson_convergence(p: SpinBosonParams, extra_steps: int = 2) -> ConvergenceReport:
    """
    Guessed heat on the cutoff ladder N, N+1, ..., N+extra_steps against the analytic sum
    """
    analytic = spin_boson_analytic_heat(p)
    scale = abs(analytic) if analytic != 0 else 1.0
    ladder, heats, errors = [], [], []
    exp_residual: Optional[float] = None
    for step in range(extra_steps + 1):
        params = p.with_cutoffs([n + step for n in p.cutoffs])
        g = build_guessed_ensemble(spin_boson_model(params))
        if exp_residual is None:
            exp_residual = abs(exp_average_delta_e(g, params.beta) - 1.0)
        ladder.append(params.cutoffs)
        heats.append(g.guessed_heat)
        errors.append(abs(g.guessed_heat - analytic) / scale)
    monotone = all(later <= earlier for earlier, later in zip(errors, errors[1:]))
    logger.info("spin_boson_ladder", cutoffs=ladder, relative_errors=errors)
    return ConvergenceReport(
        cutoffs=ladder,
        numeric_heat=heats,
        analytic_heat=analytic,
        relative_errors=errors,
        monotone=monotone,
        exp_average_residual=exp_residual,
    )


def ohmic_modes(
    n_modes: int = 200,
    omega_c: float = 1.0,
    coupling: float = 0.05,
    omega_max: Optional[float] = None,
) -> List[BosonMode]:
    """
    Midpoint sampling of J(omega) = coupling * omega * e^{-omega/omega_c} on (0, omega_max]
    with |g_k|^2 = J(omega_k) Δω / omega_k
    """
    omega_max = 8 * omega_c if omega_max is None else omega_max
    spacing = omega_max / n_modes
    omegas = (np.arange(n_modes) + 0.5) * spacing
    strengths = np.sqrt(coupling * np.exp(-omegas / omega_c) * spacing)
    return [BosonMode(omega=float(w), g=complex(s)) for w, s in zip(omegas, strengths)]


def continuum_decay_check(
    modes: Sequence[BosonMode],
    omega_c: float = 1.0,
    late_time: Optional[float] = None,
    early_window: Optional[float] = None,
    threshold: float = 0.1,
    n_early: int = 500,
) -> ContinuumDecayReport:
    """
    Compare the guessed heat flow at late times with its early-time peak
    """
    late_time = 50 / omega_c if late_time is None else late_time
    early_window = 5 / omega_c if early_window is None else early_window
    early = [abs(spin_boson_analytic_heat_flow(modes, s)) for s in np.linspace(0, early_window, n_early)[1:]]
    peak = max(early)
    late = abs(spin_boson_analytic_heat_flow(modes, late_time))
    ratio = late / peak if peak > 0 else 0.0
    return ContinuumDecayReport(
        early_peak=peak,
        late_flow=late,
        ratio=ratio,
        threshold=threshold,
        passed=ratio < threshold,
        late_heat=_analytic_heat(modes, late_time),
    )
