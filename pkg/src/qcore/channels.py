"""
Channels induced by a joint unitary and a bath state: Stinespring form, Kraus set, Choi check
"""
from math import prod

import numpy as np

from src.core.exceptions import DimensionError
from src.qcore.operators import partial_trace_bath, tensor
from src.qcore.schemas import ChoiReport, DensityOperator, Operator
from src.qcore.spectral import eig_hermitian


def _check_joint_dims(u: Operator, system_dims, bath_dims) -> None:
    expected = tuple(system_dims) + tuple(bath_dims)
    if u.dims != expected:
        raise DimensionError(f"Unitary dims {u.dims} do not match system+bath dims {expected}")


def evolve(u: Operator, rho: np.ndarray) -> np.ndarray:
    """U rho U† on raw matrices"""
    return u.data @ rho @ u.data.conj().T


def apply_channel(u: Operator, bath_state: DensityOperator, system_state: DensityOperator) -> DensityOperator:
    """
    Tr_B[U (rho_S ⊗ rho_B) U†]
    """
    _check_joint_dims(u, system_state.dims, bath_state.dims)
    joint = tensor(system_state.op, bath_state.op)
    evolved = Operator(dims=u.dims, data=evolve(u, joint.data))
    reduced = partial_trace_bath(evolved, len(system_state.dims))
    return DensityOperator.from_matrix(reduced.data, reduced.dims)


def kraus_operators(u: Operator, bath_state: DensityOperator, d_system: int) -> list[np.ndarray]:
    """
    K_{jk} = sqrt(lambda_k) <j|_B U |k>_B over the bath eigenbasis {lambda_k, |k>}
    """
    d_bath = u.dim // d_system
    if d_system * d_bath != u.dim or bath_state.op.dim != d_bath:
        raise DimensionError(
            f"Unitary of side {u.dim} cannot be split as {d_system} x {bath_state.op.dim}"
        )
    spectrum = eig_hermitian(bath_state.op)
    blocks = u.data.reshape(d_system, d_bath, d_system, d_bath)
    kraus = []
    for k, weight in enumerate(spectrum.eigenvalues):
        if weight <= 0:
            continue
        ket_k = spectrum.eigenvectors[:, k]
        # contract the bath input with |k>: (d_S, d_B, d_S)
        u_k = np.einsum("ajbl,l->ajb", blocks, ket_k)
        for j in range(d_bath):
            kraus.append(np.sqrt(weight) * u_k[:, j, :])
    return kraus


def choi_cptp_check(u: Operator, bath_state: DensityOperator, d_system: int) -> ChoiReport:
    """
    Choi matrix J = sum_ab Phi(|a><b|) ⊗ |a><b| from the channel's action on matrix units
    """
    d_bath = bath_state.op.dim
    if d_system * d_bath != u.dim:
        raise DimensionError(f"Unitary of side {u.dim} cannot be split as {d_system} x {d_bath}")
    system_dims = u.dims[: len(u.dims) - len(bath_state.dims)]
    if prod(system_dims) != d_system:
        system_dims = (d_system,)
        u = Operator(dims=system_dims + bath_state.dims, data=u.data)

    choi = np.zeros((d_system * d_system, d_system * d_system), dtype=np.complex128)
    for a in range(d_system):
        for b in range(d_system):
            unit = np.zeros((d_system, d_system), dtype=np.complex128)
            unit[a, b] = 1.0
            joint = np.kron(unit, bath_state.data)
            out = Operator(dims=u.dims, data=evolve(u, joint))
            image = partial_trace_bath(out, len(system_dims)).data
            choi += np.kron(image, unit)

    # trace over the output factor must give the identity on the input
    blocks = choi.reshape(d_system, d_system, d_system, d_system)
    reduced_input = np.einsum("iaib->ab", blocks)
    trace_residual = float(np.max(np.abs(reduced_input - np.eye(d_system))))
    min_eig = float(np.linalg.eigvalsh(0.5 * (choi + choi.conj().T))[0])

    kraus = kraus_operators(u, bath_state, d_system)
    completeness = sum(k.conj().T @ k for k in kraus)
    kraus_residual = float(np.max(np.abs(completeness - np.eye(d_system))))

    return ChoiReport(
        trace_preserving=trace_residual <= 1e-9,
        trace_residual=trace_residual,
        min_choi_eigenvalue=min_eig,
        kraus_completeness_residual=kraus_residual,
    )
