"""
Parameter schemas for the example models
"""
import math
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.exceptions import ParameterError

# e^{-beta omega N} must fall below this at the Fock cutoff N
THERMAL_TAIL_BOUND = 1e-10
# |G_k| t must stay below this fraction of sqrt(N)
DISPLACEMENT_FRACTION = 0.25


class TwoQubitDephasingParams(BaseModel):
    """
    H = omega_s σ_z^S + omega_b σ_z^B + j σ_z^S σ_x^B
    """
    omega_s: float = Field(0.5, description="System σ_z coefficient")
    omega_b: float = Field(..., description="Bath σ_z coefficient")
    j: float = Field(..., description="σ_z^S σ_x^B coupling strength")
    beta: float = Field(..., gt=0)
    t: float = Field(..., ge=0)
    beta_b: Optional[float] = Field(None, gt=0, description="Bath inverse temperature when it differs from beta")

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    @property
    def bath_beta(self) -> float:
        return self.beta if self.beta_b is None else self.beta_b


class BosonMode(BaseModel):
    omega: float = Field(..., gt=0)
    g: complex = 0j

    model_config = ConfigDict(frozen=True)

    @field_validator("g", mode="before")
    @classmethod
    def _pair_to_complex(cls, value):
        """Accept [re, im] pairs, which TOML can express"""
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError("coupling must be a number or a [re, im] pair")
            return complex(float(value[0]), float(value[1]))
        return value


def displacement(mode: BosonMode, t: float) -> complex:
    """G_k(t) = g_k sinc(omega t / 2) e^{-i omega t / 2}"""
    half_phase = mode.omega * t / 2
    sinc = math.sin(half_phase) / half_phase if half_phase != 0 else 1.0
    return mode.g * sinc * complex(math.cos(half_phase), -math.sin(half_phase))


def required_cutoff(mode: BosonMode, beta: float, t: float) -> int:
    """Smallest Fock cutoff satisfying both truncation conditions"""
    thermal = math.ceil(-math.log(THERMAL_TAIL_BOUND) / (beta * mode.omega))
    shift = abs(displacement(mode, t)) * t
    displaced = math.ceil((shift / DISPLACEMENT_FRACTION) ** 2)
    return max(2, thermal, displaced)


class SpinBosonParams(BaseModel):
    """
    H = (omega0/2) σ_z + sum_k omega_k a_k† a_k + σ_z sum_k (g_k a_k + g_k* a_k†),
    each mode truncated at `fock_cutoff` quanta.
    """
    omega0: float
    modes: List[BosonMode] = Field(..., min_length=1)
    fock_cutoff: Union[int, List[int]]
    beta: float = Field(..., gt=0)
    t: float = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_cutoffs(self) -> "SpinBosonParams":
        cutoffs = self.cutoffs
        if len(cutoffs) != len(self.modes):
            raise ParameterError(f"{len(cutoffs)} cutoffs given for {len(self.modes)} modes", field="fock_cutoff")
        for k, (mode, cutoff) in enumerate(zip(self.modes, cutoffs)):
            needed = required_cutoff(mode, self.beta, self.t)
            if cutoff < 2:
                raise ParameterError(
                    f"Mode {k}: Fock cutoff must be at least 2", suggestion=f"fock_cutoff >= {needed}", field="fock_cutoff"
                )
            tail = math.exp(-self.beta * mode.omega * cutoff)
            if tail > THERMAL_TAIL_BOUND:
                raise ParameterError(
                    f"Mode {k}: thermal tail e^(-beta omega N) = {tail:.2e} exceeds {THERMAL_TAIL_BOUND:.0e}",
                    suggestion=f"fock_cutoff >= {needed}",
                    field="fock_cutoff",
                )
            shift = abs(displacement(mode, self.t)) * self.t
            if shift > DISPLACEMENT_FRACTION * math.sqrt(cutoff):
                raise ParameterError(
                    f"Mode {k}: displacement |G t| = {shift:.3g} too large for cutoff {cutoff}",
                    suggestion=f"fock_cutoff >= {needed}",
                    field="fock_cutoff",
                )
        return self

    @property
    def cutoffs(self) -> List[int]:
        if isinstance(self.fock_cutoff, int):
            return [self.fock_cutoff] * len(self.modes)
        return list(self.fock_cutoff)

    @property
    def levels(self) -> List[int]:
        """Fock-space dimension per mode (cutoff N keeps |0>..|N>)"""
        return [n + 1 for n in self.cutoffs]

    @classmethod
    def validated(cls, omega0: float, modes, beta: float, t: float) -> "SpinBosonParams":
        """Build with the smallest cutoff per mode that passes validation"""
        modes = [m if isinstance(m, BosonMode) else BosonMode(**m) for m in modes]
        cutoffs = [required_cutoff(mode, beta, t) for mode in modes]
        return cls(omega0=omega0, modes=modes, fock_cutoff=cutoffs, beta=beta, t=t)

    def with_cutoffs(self, cutoffs: List[int]) -> "SpinBosonParams":
        return SpinBosonParams(
            omega0=self.omega0, modes=self.modes, fock_cutoff=list(cutoffs), beta=self.beta, t=self.t
        )


class RandomModelParams(BaseModel):
    seed: int
    d_system: int = Field(..., ge=1)
    d_bath: int = Field(..., ge=1)
    n_segments: int = Field(1, ge=1)
    time_dependent_system: bool = False
    interaction_scale: float = Field(1.0, ge=0)
    beta_s: float = Field(1.0, gt=0)
    beta_b: Optional[float] = Field(None, gt=0)

    model_config = ConfigDict(frozen=True)


class ContinuumDecayReport(BaseModel):
    """
    Late-time heat flow of a sampled continuum bath relative to its early peak
    """
    early_peak: float
    late_flow: float
    ratio: float
    threshold: float
    passed: bool
    late_heat: float = Field(..., description="Guessed heat at the late time, for reference")


class ClosedSystemReport(BaseModel):
    guessed_heat: float
    work_minus_delta_e: float
    relative_entropy_gap: float = Field(..., description="|D_full - D_reduced|")
    guessed_state_residual: float
    jarzynski_residual: float
    passed: bool


class ConvergenceReport(BaseModel):
    cutoffs: List[List[int]]
    numeric_heat: List[float]
    analytic_heat: float
    relative_errors: List[float]
    monotone: bool
    exp_average_residual: float
