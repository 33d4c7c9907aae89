"""
Dense operator algebra: tensor products, partial traces, spectra, propagators and channels
"""

from src.qcore.channels import apply_channel, choi_cptp_check, kraus_operators
from src.qcore.operators import (
    annihilation,
    embed,
    identity,
    partial_trace_bath,
    pauli,
    tensor,
    tensor_all,
)
from src.qcore.schemas import DensityOperator, Operator, Protocol, ProtocolSegment, Spectrum
from src.qcore.spectral import (
    eig_hermitian,
    evolution_operator,
    expm_unitary,
    function_of_hermitian,
    propagator,
    unitarity_residual,
)
