"""
Seeded random system+bath models for property sweeps
"""
import numpy as np

from src.core.config import settings
from src.core.exceptions import ParameterError
from src.models.schemas import RandomModelParams
from src.otm.schemas import ThermalModel
from src.qcore.operators import identity, tensor
from src.qcore.schemas import Operator, Protocol

MIN_SEGMENT_DURATION = 0.2
MAX_SEGMENT_DURATION = 1.0


def random_hermitian(rng: np.random.Generator, dims: tuple, scale: float = 1.0) -> Operator:
    """Gaussian complex matrix, symmetrized to (A + A†) / 2"""
    side = int(np.prod(dims))
    a = (rng.standard_normal((side, side)) + 1j * rng.standard_normal((side, side))) / 2
    return Operator(dims=dims, data=scale * (a + a.conj().T) / 2)


def check_total_dim(d_system: int, d_bath: int) -> None:
    """System times bath dimension must fit the exhaustive two-point enumeration"""
    total_dim = d_system * d_bath
    if not 2 <= total_dim <= settings.numerics.tpm_max_dim:
        raise ParameterError(
            f"d_system * d_bath = {total_dim} outside [2, {settings.numerics.tpm_max_dim}]", field="d_system"
        )


def random_model(
    seed: int,
    d_system: int,
    d_bath: int,
    n_segments: int = 1,
    time_dependent_system: bool = False,
    interaction_scale: float = 1.0,
    beta_s: float = 1.0,
    beta_b: float = None,
) -> ThermalModel:
    """
    Piecewise-constant H_S(t) ⊗ I + I ⊗ H_B + V(t), deterministic in `seed`
    """
    check_total_dim(d_system, d_bath)
    if n_segments < 1:
        raise ParameterError(f"n_segments must be positive, got {n_segments}", field="n_segments")

    rng = np.random.default_rng(seed)
    system_dims, bath_dims = (d_system,), (d_bath,)
    h_b = random_hermitian(rng, bath_dims)
    h_s = random_hermitian(rng, system_dims)

    segments, system_parts = [], []
    for k in range(n_segments):
        if time_dependent_system and k > 0:
            h_s = random_hermitian(rng, system_dims)
        interaction = random_hermitian(rng, system_dims + bath_dims, scale=interaction_scale)
        generator = tensor(h_s, identity(bath_dims)) + tensor(identity(system_dims), h_b) + interaction
        duration = float(rng.uniform(MIN_SEGMENT_DURATION, MAX_SEGMENT_DURATION))
        segments.append((duration, generator))
        system_parts.append(h_s)

    return ThermalModel(
        n_system_factors=1,
        protocol=Protocol.from_segments(segments),
        h_s_initial=system_parts[0],
        h_s_final=system_parts[-1],
        h_b=h_b,
        beta_s=beta_s,
        beta_b=beta_s if beta_b is None else beta_b,
        segment_system_hamiltonians=system_parts,
        label=f"random[{seed}]",
    )


def random_model_from(params: RandomModelParams) -> ThermalModel:
    return random_model(**params.model_dump())
