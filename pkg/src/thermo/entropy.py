"""
Entropic functionals on density operators
"""
import math
from functools import reduce

import numpy as np

from src.core.config import settings
from src.core.exceptions import DimensionError, OperatorValidationError
from src.qcore.schemas import DensityOperator, Operator
from src.thermo.schemas import GibbsState


def _xlogx(values: np.ndarray) -> float:
    """sum x ln x with 0 ln 0 := 0 on values clipped to [0, 1]"""
    clipped = np.clip(values, 0.0, 1.0)
    positive = clipped[clipped > 0]
    return float(np.sum(positive * np.log(positive)))


def von_neumann_entropy(rho: DensityOperator) -> float:
    """
    -Tr[rho ln rho]
    """
    return -_xlogx(np.linalg.eigvalsh(rho.data))


def relative_entropy(rho: DensityOperator, sigma: DensityOperator) -> float:
    """
    Tr[rho ln rho] - Tr[rho ln sigma], each trace taken in its own eigenbasis.

    Returns math.inf when rho has weight outside the support of sigma.
    """
    if rho.dims != sigma.dims:
        raise DimensionError(f"State dims {rho.dims} and {sigma.dims} differ")
    numerics = settings.numerics
    sigma_values, sigma_vectors = np.linalg.eigh(sigma.data)
    # <v_k| rho |v_k> for every eigenvector of sigma
    weights = np.real(np.einsum("ik,ij,jk->k", sigma_vectors.conj(), rho.data, sigma_vectors))

    outside = sigma_values <= numerics.support_floor
    if np.any(weights[outside] > numerics.tol_psd):
        return math.inf
    inside = ~outside
    cross = float(np.sum(weights[inside] * np.log(sigma_values[inside])))
    return _xlogx(np.linalg.eigvalsh(rho.data)) - cross


def log_of_product(*references: GibbsState) -> Operator:
    """ln(tau_1 ⊗ ... ⊗ tau_n) = sum_i I ⊗ ln tau_i ⊗ I"""
    dims = tuple(d for ref in references for d in ref.dims)
    total = np.zeros((int(np.prod(dims)),) * 2, dtype=np.complex128)
    for i, ref in enumerate(references):
        factors = [np.eye(int(np.prod(other.dims))) for other in references]
        factors[i] = ref.log_state.data
        total += reduce(np.kron, factors)
    return Operator(dims=dims, data=total)


def relative_entropy_to_gibbs(rho: DensityOperator, *references: GibbsState) -> float:
    """
    D[rho || tau_1 ⊗ ... ⊗ tau_n] using the exact logarithm of each Gibbs state
    """
    log_sigma = log_of_product(*references)
    if rho.dims != log_sigma.dims:
        raise DimensionError(f"State dims {rho.dims} do not match reference dims {log_sigma.dims}")
    cross = float(np.real(np.trace(rho.data @ log_sigma.data)))
    return _xlogx(np.linalg.eigvalsh(rho.data)) - cross


def energy_expectation(h: Operator, rho: DensityOperator) -> float:
    """
    Re Tr[h rho]; the imaginary residual must vanish for Hermitian h
    """
    if h.dims != rho.dims:
        raise DimensionError(f"Operator dims {h.dims} and state dims {rho.dims} differ")
    value = complex(np.sum(h.data * rho.data.T))
    if abs(value.imag) > settings.numerics.tol_herm:
        raise OperatorValidationError(
            f"Energy expectation has imaginary part {value.imag:.3e}; is the operator Hermitian?"
        )
    return value.real
