"""
Deterministic Hermitian eigendecomposition, unitary exponentials and propagators
"""
import numpy as np
import scipy.linalg

from src.core.config import settings
from src.core.exceptions import OperatorValidationError
from src.core.logging import get_logger
from src.qcore.schemas import Operator, Protocol, Spectrum


logger = get_logger(__name__)


def _require_hermitian(h: Operator) -> None:
    residual = h.hermiticity_residual()
    if residual > settings.numerics.tol_herm:
        raise OperatorValidationError(
            f"Expected a Hermitian operator, residual {residual:.2e} exceeds {settings.numerics.tol_herm:.0e}"
        )


def _fix_phase(vectors: np.ndarray) -> np.ndarray:
    """
    Rotate each column so its first largest-magnitude component is real and positive
    """
    fixed = vectors.copy()
    for col in range(fixed.shape[1]):
        column = fixed[:, col]
        magnitudes = np.abs(column)
        # first index within round-off of the maximum
        index = int(np.argmax(magnitudes >= magnitudes.max() * (1.0 - 1e-9)))
        anchor = column[index]
        fixed[:, col] = column * (abs(anchor) / anchor)
    return fixed


def _degenerate_clusters(values: np.ndarray, gap: float) -> list[list[int]]:
    clusters = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] < gap:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def eig_hermitian(h: Operator) -> Spectrum:
    """
    Ascending spectrum with phase-fixed eigenvectors.

    Inside a numerically degenerate cluster (gap below degeneracy_rtol * max|h|)
    the vectors are ordered by the real parts of their components. The
    convention is descending lexicographic order: the vector with the largest
    first real component comes first, ties broken by the next component. The
    standard basis therefore keeps its natural order.
    """
    _require_hermitian(h)
    hermitian = 0.5 * (h.data + h.data.conj().T)
    values, vectors = scipy.linalg.eigh(hermitian)
    vectors = _fix_phase(vectors)

    scale = max(h.max_abs(), np.finfo(float).tiny)
    clusters = _degenerate_clusters(values, settings.numerics.degeneracy_rtol * scale)
    degenerate = any(len(cluster) > 1 for cluster in clusters)
    if degenerate:
        order = []
        for cluster in clusters:
            if len(cluster) == 1:
                order.extend(cluster)
                continue
            keys = {i: tuple(-np.round(vectors[:, i].real, 12)) for i in cluster}
            order.extend(sorted(cluster, key=lambda i: keys[i]))
        vectors = vectors[:, order]
        logger.debug("degenerate_spectrum", clusters=[c for c in clusters if len(c) > 1])

    return Spectrum(dims=h.dims, eigenvalues=values, eigenvectors=vectors, degenerate=degenerate)


def function_of_hermitian(h: Operator, func) -> Operator:
    """Apply a scalar function through the spectral decomposition V f(Λ) V†"""
    spectrum = eig_hermitian(h)
    v = spectrum.eigenvectors
    return Operator(dims=h.dims, data=(v * func(spectrum.eigenvalues)) @ v.conj().T)


def expm_unitary(h: Operator, t: float) -> Operator:
    """
    e^{-iht} via the spectral decomposition
    """
    _require_hermitian(h)
    if t == 0:
        return Operator(dims=h.dims, data=np.eye(h.dim))
    return function_of_hermitian(h, lambda values: np.exp(-1j * values * t))


def propagator(p: Protocol) -> Operator:
    """
    Time-ordered product of segment exponentials, latest segment leftmost
    """
    if p.is_empty:
        raise OperatorValidationError("Cannot build a propagator for an empty protocol")
    u = np.eye(int(np.prod(p.dims)), dtype=np.complex128)
    for segment in p.segments:
        u = expm_unitary(segment.generator, segment.duration).data @ u
    return Operator(dims=tuple(p.dims), data=u)


def evolution_operator(p: Protocol) -> Operator:
    """
    Propagator of a protocol, with the identity standing in for zero elapsed time
    """
    if p.is_empty:
        return Operator(dims=tuple(p.dims), data=np.eye(int(np.prod(p.dims))))
    return propagator(p)


def unitarity_residual(u: Operator) -> float:
    return float(np.max(np.abs(u.data.conj().T @ u.data - np.eye(u.dim))))
