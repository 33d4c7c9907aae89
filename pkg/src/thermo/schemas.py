"""
Pydantic schema for thermal equilibrium states
"""
from pydantic import BaseModel, ConfigDict, Field

from src.qcore.schemas import DensityOperator, Operator, Spectrum


class GibbsState(BaseModel):
    """
    e^{-beta H}/Z with its partition function and free energy.

    `log_state` is ln(e^{-beta H}/Z) evaluated from the spectrum of H, so it stays
    exact even where the Boltzmann weights underflow.
    """
    state: DensityOperator
    partition_function: float = Field(..., gt=0)
    log_partition_function: float
    free_energy: float
    beta: float = Field(..., gt=0)
    log_state: Operator
    spectrum: Spectrum

    model_config = ConfigDict(frozen=True)

    @property
    def dims(self):
        return self.state.dims
