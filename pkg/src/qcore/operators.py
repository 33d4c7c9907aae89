"""
Tensor-product construction and partial traces on dense operators
"""
from functools import reduce
from math import prod
from typing import Sequence

import numpy as np

from src.core.exceptions import DimensionError
from src.qcore.schemas import Operator

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli(axis: str) -> Operator:
    """Single-qubit Pauli operator for axis 'x', 'y' or 'z'"""
    matrices = {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}
    return Operator.from_array(matrices[axis])


def identity(dims: Sequence[int]) -> Operator:
    return Operator(dims=tuple(dims), data=np.eye(prod(dims)))


def tensor(a: Operator, b: Operator) -> Operator:
    """
    Kronecker product; the result carries the concatenated factor list
    """
    return Operator(dims=a.dims + b.dims, data=np.kron(a.data, b.data))


def tensor_all(*ops: Operator) -> Operator:
    return reduce(tensor, ops)


def embed(op: Operator, position: int, dims: Sequence[int]) -> Operator:
    """
    Place a single-factor operator at `position` inside I ⊗ ... ⊗ op ⊗ ... ⊗ I
    """
    dims = tuple(dims)
    if op.dims != (dims[position],):
        raise DimensionError(
            f"Operator dims {op.dims} do not match factor {position} of {dims}"
        )
    factors = [identity((d,)) for d in dims]
    factors[position] = op
    return tensor_all(*factors)


def annihilation(n_levels: int) -> Operator:
    """
    Truncated bosonic lowering operator on the Fock states |0>..|n_levels-1>
    """
    return Operator.from_array(np.diag(np.sqrt(np.arange(1, n_levels)), k=1))


def partial_trace_bath(o: Operator, n_system_factors: int) -> Operator:
    """
    Trace out every factor after the first `n_system_factors`
    """
    if not 0 < n_system_factors < len(o.dims):
        raise DimensionError(
            f"Cannot keep {n_system_factors} system factors of an operator with dims {o.dims}"
        )
    system_dims = o.dims[:n_system_factors]
    d_system = prod(system_dims)
    d_bath = prod(o.dims[n_system_factors:])
    blocks = o.data.reshape(d_system, d_bath, d_system, d_bath)
    return Operator(dims=system_dims, data=np.einsum("ajbj->ab", blocks))
