"""
Thermal states and entropic functionals
"""

from src.thermo.entropy import (
    energy_expectation,
    relative_entropy,
    relative_entropy_to_gibbs,
    von_neumann_entropy,
)
from src.thermo.gibbs import free_energy, free_energy_difference, gibbs, gibbs_probabilities
from src.thermo.schemas import GibbsState
