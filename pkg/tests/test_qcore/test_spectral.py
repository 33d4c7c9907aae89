"""
Tests for eigendecomposition, exponentials and propagators
"""
import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import OperatorValidationError
from src.models.random_models import random_hermitian
from src.qcore.operators import identity, pauli
from src.qcore.schemas import Operator, Protocol
from src.qcore.spectral import (
    eig_hermitian,
    evolution_operator,
    expm_unitary,
    function_of_hermitian,
    propagator,
    unitarity_residual,
)


def test_eigenvalues_ascending() -> None:
    """
    Test eigenvalues ascending
    """
    spectrum = eig_hermitian(Operator.from_array(np.diag([3.0, 1.0, 2.0])))
    np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 2.0, 3.0])
    assert not spectrum.degenerate


@given(seed=st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_eigenvectors_phase_fixed_and_orthonormal(seed) -> None:
    """
    Test eigenvectors phase fixed and orthonormal
    """
    h = random_hermitian(np.random.default_rng(seed), (4,))
    spectrum = eig_hermitian(h)
    v = spectrum.eigenvectors
    np.testing.assert_allclose(v.conj().T @ v, np.eye(4), atol=1e-10)
    for col in range(4):
        column = v[:, col]
        index = int(np.argmax(np.abs(column) >= np.abs(column).max() * (1 - 1e-9)))
        assert abs(column[index].imag) < 1e-12
        assert column[index].real > 0
    np.testing.assert_allclose((v * spectrum.eigenvalues) @ v.conj().T, h.data, atol=1e-10)


def test_degenerate_cluster_keeps_standard_basis_order() -> None:
    """
    Test degenerate cluster keeps standard basis order
    """
    spectrum = eig_hermitian(identity((3,)))
    assert spectrum.degenerate
    np.testing.assert_allclose(spectrum.eigenvectors, np.eye(3), atol=1e-12)


def test_degenerate_cluster_in_rotated_basis() -> None:
    """
    A degenerate pair spanned by (1, -1, 0)/sqrt2 and (0, 0, 1): the larger leading real part comes first
    """
    h = Operator.from_array([[1.5, 0.5, 0.0], [0.5, 1.5, 0.0], [0.0, 0.0, 1.0]])
    spectrum = eig_hermitian(h)
    assert spectrum.degenerate
    np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 1.0, 2.0], atol=1e-12)
    s = 1 / np.sqrt(2)
    expected = np.array([[s, 0.0, s], [-s, 0.0, s], [0.0, 1.0, 0.0]])
    np.testing.assert_allclose(spectrum.eigenvectors, expected, atol=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_eig_hermitian_is_bit_stable(seed: int) -> None:
    """
    Repeated calls on equal inputs return identical bits
    """
    h = random_hermitian(np.random.default_rng(seed), (2, 3))
    first = eig_hermitian(h)
    second = eig_hermitian(Operator(dims=h.dims, data=h.data.copy()))
    assert np.array_equal(first.eigenvalues, second.eigenvalues)
    assert np.array_equal(first.eigenvectors, second.eigenvectors)


def test_non_hermitian_rejected() -> None:
    """
    Test non hermitian rejected
    """
    with pytest.raises(OperatorValidationError):
        eig_hermitian(Operator.from_array([[0, 1], [0, 0]]))


def test_function_of_hermitian_square() -> None:
    """
    Test function of hermitian square
    """
    h = pauli("x") * 2.0
    squared = function_of_hermitian(h, lambda values: values ** 2)
    np.testing.assert_allclose(squared.data, 4 * np.eye(2), atol=1e-12)


def test_expm_matches_scipy() -> None:
    """
    Test expm matches scipy
    """
    h = random_hermitian(np.random.default_rng(3), (2, 3))
    u = expm_unitary(h, 0.7)
    np.testing.assert_allclose(u.data, scipy.linalg.expm(-1j * 0.7 * h.data), atol=1e-10)
    assert unitarity_residual(u) < 1e-12


def test_expm_at_zero_time_is_identity() -> None:
    """
    Test expm at zero time is identity
    """
    u = expm_unitary(pauli("y"), 0.0)
    np.testing.assert_array_equal(u.data, np.eye(2))


def test_propagator_latest_segment_leftmost() -> None:
    """
    Test propagator latest segment leftmost
    """
    h1, h2 = pauli("x"), pauli("z")
    protocol = Protocol.from_segments([(0.3, h1), (0.5, h2)])
    expected = scipy.linalg.expm(-0.5j * h2.data) @ scipy.linalg.expm(-0.3j * h1.data)
    np.testing.assert_allclose(propagator(protocol).data, expected, atol=1e-12)
    assert protocol.total_time == pytest.approx(0.8)


def test_empty_protocol() -> None:
    """
    Test empty protocol
    """
    protocol = Protocol.from_segments([], dims=(2, 3))
    assert protocol.is_empty
    np.testing.assert_array_equal(evolution_operator(protocol).data, np.eye(6))
    with pytest.raises(OperatorValidationError):
        propagator(protocol)


def test_empty_protocol_needs_dims() -> None:
    """
    Test empty protocol needs dims
    """
    with pytest.raises(OperatorValidationError):
        Protocol.from_segments([])


def test_segment_generator_must_be_hermitian() -> None:
    """
    Test segment generator must be hermitian
    """
    with pytest.raises(OperatorValidationError):
        Protocol.from_segments([(1.0, Operator.from_array([[0, 1], [0, 0]]))])
