"""
Two-point measurement scheme on system and bath jointly
"""

from src.tpm.distribution import (
    build_tpm_distribution,
    exact_work_expectation,
    standard_jarzynski_average,
)
from src.tpm.relations import (
    bath_energy_correction,
    deviation_inequalities,
    modified_vs_standard_residual,
    work_relation_residual,
)
from src.tpm.schemas import DeviationReport, TpmDistribution, TpmTrajectory
