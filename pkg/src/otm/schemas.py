"""
Pydantic schemas for the one-time measurement scheme
"""
from math import prod
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.exceptions import DimensionError, ParameterError
from src.qcore.schemas import DensityOperator, Operator, Protocol


class ThermalModel(BaseModel):
    """
    System+bath Hamiltonians, the total-Hamiltonian protocol and both temperatures
    """
    n_system_factors: int = Field(..., ge=1)
    protocol: Protocol
    h_s_initial: Operator = Field(..., description="H_S(0), measured at the start")
    h_s_final: Operator = Field(..., description="H_S(t), entering the final mean energy")
    h_b: Operator = Field(..., description="Time-independent bath Hamiltonian")
    beta_s: float = Field(..., gt=0)
    beta_b: float = Field(..., gt=0)
    segment_system_hamiltonians: Optional[List[Operator]] = Field(
        None, description="System part of each protocol segment, when the generator splits as H_S + H_B + V"
    )
    label: str = "model"

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_dims(self) -> "ThermalModel":
        if len(self.h_s_initial.dims) != self.n_system_factors:
            raise DimensionError(
                f"h_s_initial has {len(self.h_s_initial.dims)} factors, expected {self.n_system_factors}"
            )
        if self.h_s_final.dims != self.h_s_initial.dims:
            raise DimensionError("Initial and final system Hamiltonians act on different spaces")
        full = self.h_s_initial.dims + self.h_b.dims
        if tuple(self.protocol.dims) != full:
            raise DimensionError(f"Protocol dims {self.protocol.dims} differ from system+bath dims {full}")
        for name in ("h_s_initial", "h_s_final", "h_b"):
            if not getattr(self, name).is_hermitian():
                raise ParameterError(f"{name} is not Hermitian")
        if self.segment_system_hamiltonians is not None:
            if len(self.segment_system_hamiltonians) != len(self.protocol.segments):
                raise DimensionError("One system Hamiltonian per protocol segment is required")
        return self

    @property
    def system_dims(self) -> Tuple[int, ...]:
        return self.h_s_initial.dims

    @property
    def bath_dims(self) -> Tuple[int, ...]:
        return self.h_b.dims

    @property
    def d_system(self) -> int:
        return prod(self.system_dims)

    @property
    def d_bath(self) -> int:
        return prod(self.bath_dims)

    @property
    def total_dim(self) -> int:
        return self.d_system * self.d_bath

    @property
    def same_temperature(self) -> bool:
        return self.beta_s == self.beta_b


class OutcomeRecord(BaseModel):
    """
    One initial energy outcome and the system state it evolves into
    """
    index: int
    epsilon: float = Field(..., description="Eigenvalue of H_S(0)")
    prob_initial: float = Field(..., ge=0, le=1)
    evolved_state: DensityOperator
    final_mean_energy: float = Field(..., description="Tr[H_S(t) Phi_t(|eps><eps|)]")
    delta_e_tilde: float

    model_config = ConfigDict(frozen=True)


class GuessedEnsemble(BaseModel):
    """
    Outcome ensemble, modified partition function and the maximum-entropy guessed state
    """
    outcomes: List[OutcomeRecord]
    beta_s: float
    beta_b: float
    z_tilde: float = Field(..., ge=0)
    log_z_tilde: float
    f_tilde: float
    p_guess: List[float]
    theta_sb: DensityOperator
    rho_s_tilde: DensityOperator
    guessed_heat: float
    relative_entropy_full: float
    relative_entropy_reduced: float
    log_z_s_initial: float
    log_z_s_final: float
    free_energy_initial: float
    free_energy_final: float
    mean_delta_e: float = Field(..., description="<Delta E> over the outcome distribution")
    bath_energy_initial: float
    bath_energy_guessed: float
    degenerate_initial_spectrum: bool = False

    model_config = ConfigDict(frozen=True)

    @property
    def delta_f(self) -> float:
        return self.free_energy_final - self.free_energy_initial

    @property
    def mean_guessed_work(self) -> float:
        """<W~> = <Delta E> - <Q~>_B"""
        return self.mean_delta_e - self.guessed_heat

    @property
    def delta_beta(self) -> float:
        return self.beta_b - self.beta_s


class Theorem1Report(BaseModel):
    lhs: float
    rhs: float
    residual: float


class Theorem2Report(BaseModel):
    lhs: float
    rhs: float
    residual: float
    work_bound_gap: float


class WorkGapReport(BaseModel):
    mean_guessed_work: float
    gap_full: float
    gap_reduced: float


class SteinReport(BaseModel):
    rate: float = Field(..., description="lim (1/n) ln B_n = -D[Theta || tau_S(t) ⊗ tau_B]")
    consistency_residual: float


class MaxEntropyReport(BaseModel):
    passed: bool
    skipped: bool = False
    n_tested: int = 0
    worst_increase: float = float("-inf")
    notice: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed
