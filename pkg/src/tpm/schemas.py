"""
Pydantic schemas for the two-point measurement scheme
"""
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class TpmTrajectory(BaseModel):
    """
    (eps, q) -> (eps', q') with its joint probability and work
    """
    epsilon: float
    q: float
    epsilon_prime: float
    q_prime: float
    probability: float = Field(..., ge=0)
    work: float = Field(..., description="(q' + eps') - (q + eps)")

    model_config = ConfigDict(frozen=True)


class TpmDistribution(BaseModel):
    trajectories: List[TpmTrajectory]
    beta: float = Field(..., gt=0)

    model_config = ConfigDict(frozen=True)

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([t.probability for t in self.trajectories])

    @property
    def works(self) -> np.ndarray:
        return np.array([t.work for t in self.trajectories])

    def mean_work(self) -> float:
        return float(np.sum(self.probabilities * self.works))


class DeviationReport(BaseModel):
    """
    Lower bounds on the exponential deviations between guessed and exact work
    """
    lhs1: float = Field(..., description="<e^{-beta (W - <W~>)}>")
    lhs2: float = Field(..., description="<e^{-beta (W~ - <W>)}> over the outcome distribution")
    bound1: float = Field(..., description="e^{D_full}")
    bound2: float = Field(..., description="e^{-D_full}")
    bound_reduced: float = Field(..., description="e^{D_reduced}")
    product: float
    ineq1_ok: bool
    ineq2_ok: bool
    product_ok: bool
    chain_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.ineq1_ok and self.ineq2_ok and self.product_ok and self.chain_ok
