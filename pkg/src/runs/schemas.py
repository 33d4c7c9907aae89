"""
Pydantic schemas for run configurations
"""
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.closed_system import quench_model
from src.models.random_models import check_total_dim, random_model
from src.models.schemas import BosonMode, SpinBosonParams, TwoQubitDephasingParams
from src.models.spin_boson import ohmic_modes, spin_boson_model
from src.models.two_qubit import two_qubit_dephasing_model
from src.otm.schemas import ThermalModel
from src.runs.checks import CHECKS
from src.utils.helpers import get_path, split_path


class _ModelBlock(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def build(self, seed: int) -> ThermalModel:
        raise NotImplementedError

    def validate_params(self, seed: int) -> None:
        """Raise the model's own parameter errors without building operators"""

    def oracle(self):
        """Parameter object with closed-form results, if the model has one"""
        return None


class TwoQubitModelConfig(_ModelBlock):
    kind: Literal["two_qubit_dephasing"]
    omega_s: float = 0.5
    omega_b: float
    j: float
    beta: float = Field(..., gt=0)
    t: float = Field(..., ge=0)
    beta_b: Optional[float] = Field(None, gt=0)

    def params(self) -> TwoQubitDephasingParams:
        return TwoQubitDephasingParams(**self.model_dump(exclude={"kind"}))

    def build(self, seed: int) -> ThermalModel:
        return two_qubit_dephasing_model(self.params())

    def oracle(self) -> TwoQubitDephasingParams:
        return self.params()

    def validate_params(self, seed: int) -> None:
        self.params()


class OhmicPreset(BaseModel):
    name: Literal["ohmic"] = "ohmic"
    n_modes: int = Field(3, ge=1)
    omega_c: float = Field(1.0, gt=0)
    coupling: float = Field(0.05, ge=0)
    omega_max: Optional[float] = Field(None, gt=0)

    model_config = ConfigDict(extra="forbid", frozen=True)


class SpinBosonModelConfig(_ModelBlock):
    kind: Literal["spin_boson"]
    omega0: float = 1.0
    beta: float = Field(..., gt=0)
    t: float = Field(..., ge=0)
    modes: Optional[List[BosonMode]] = None
    spectral_density: Optional[OhmicPreset] = None
    fock_cutoff: Optional[Union[int, List[int]]] = Field(
        None, description="Omitted: the smallest cutoff per mode passing validation"
    )

    @model_validator(mode="after")
    def _one_mode_source(self) -> "SpinBosonModelConfig":
        if (self.modes is None) == (self.spectral_density is None):
            raise ValueError("give exactly one of 'modes' or 'spectral_density'")
        return self

    def mode_list(self) -> List[BosonMode]:
        if self.modes is not None:
            return list(self.modes)
        preset = self.spectral_density
        return ohmic_modes(preset.n_modes, preset.omega_c, preset.coupling, preset.omega_max)

    def params(self) -> SpinBosonParams:
        if self.fock_cutoff is None:
            return SpinBosonParams.validated(self.omega0, self.mode_list(), self.beta, self.t)
        return SpinBosonParams(
            omega0=self.omega0, modes=self.mode_list(), fock_cutoff=self.fock_cutoff, beta=self.beta, t=self.t
        )

    def build(self, seed: int) -> ThermalModel:
        return spin_boson_model(self.params())

    def oracle(self) -> SpinBosonParams:
        return self.params()

    def validate_params(self, seed: int) -> None:
        self.params()


class RandomModelConfig(_ModelBlock):
    kind: Literal["random"]
    d_system: int = Field(2, ge=1)
    d_bath: int = Field(2, ge=1)
    n_segments: int = Field(1, ge=1)
    time_dependent_system: bool = False
    interaction_scale: float = Field(1.0, ge=0)
    beta_s: float = Field(1.0, gt=0)
    beta_b: Optional[float] = Field(None, gt=0)
    seed: Optional[int] = None

    def build(self, seed: int) -> ThermalModel:
        return random_model(
            seed=seed if self.seed is None else self.seed,
            d_system=self.d_system,
            d_bath=self.d_bath,
            n_segments=self.n_segments,
            time_dependent_system=self.time_dependent_system,
            interaction_scale=self.interaction_scale,
            beta_s=self.beta_s,
            beta_b=self.beta_b,
        )

    def validate_params(self, seed: int) -> None:
        check_total_dim(self.d_system, self.d_bath)


class ClosedSystemModelConfig(_ModelBlock):
    kind: Literal["closed_system"]
    d_system: int = Field(3, ge=1)
    d_bath: int = Field(2, ge=1)
    t: float = Field(1.0, ge=0)
    beta: float = Field(1.0, gt=0)
    seed: Optional[int] = None

    def build(self, seed: int) -> ThermalModel:
        return quench_model(
            seed if self.seed is None else self.seed,
            d_system=self.d_system,
            d_bath=self.d_bath,
            t=self.t,
            beta=self.beta,
        )

    def validate_params(self, seed: int) -> None:
        check_total_dim(self.d_system, self.d_bath)


ModelBlock = Annotated[
    Union[TwoQubitModelConfig, SpinBosonModelConfig, RandomModelConfig, ClosedSystemModelConfig],
    Field(discriminator="kind"),
]


class SweepAxis(BaseModel):
    """
    One swept parameter: an explicit value list or an integer range [start, stop)
    """
    path: str = Field(..., description="Dotted path inside the model block, e.g. 't' or 'modes.0.g'")
    values: Optional[List[float]] = None
    range: Optional[List[int]] = Field(None, min_length=2, max_length=3)

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _one_source(self) -> "SweepAxis":
        if (self.values is None) == (self.range is None):
            raise ValueError("give exactly one of 'values' or 'range'")
        if self.values is not None and not self.values:
            raise ValueError("'values' must not be empty")
        return self

    def points(self) -> List[Any]:
        if self.values is not None:
            return list(self.values)
        return list(range(*self.range))


class OutputConfig(BaseModel):
    format: Literal["csv", "json"] = "csv"
    path: Optional[str] = Field(None, description="Omitted or '-': standard output")

    model_config = ConfigDict(extra="forbid", frozen=True)


class RunConfig(BaseModel):
    """
    One model block, an optional sweep cross-product, outputs and checks
    """
    model: ModelBlock
    sweep: List[SweepAxis] = Field(default_factory=list)
    outputs: OutputConfig = Field(default_factory=OutputConfig)
    checks: List[str] = Field(default_factory=list)
    seed: int = 0

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _check_paths_and_checks(self) -> "RunConfig":
        block: Dict[str, Any] = self.model.model_dump()
        for axis in self.sweep:
            try:
                target = get_path(block, split_path(axis.path))
            except (KeyError, IndexError, TypeError):
                raise ValueError(f"sweep path '{axis.path}' does not exist in the '{self.model.kind}' block")
            # optional fields left unset (None) may be swept too
            if isinstance(target, bool) or not (target is None or isinstance(target, (int, float, complex))):
                raise ValueError(f"sweep path '{axis.path}' is not a numeric field")
        unknown = [name for name in self.checks if name not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks {unknown}; registered: {sorted(CHECKS)}")
        return self
