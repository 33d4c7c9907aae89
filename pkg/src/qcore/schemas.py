"""
Pydantic schemas for operators, density operators, spectra and protocols
"""
from math import prod
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.config import settings
from src.core.exceptions import DimensionError, OperatorValidationError


def _frozen_array(data: np.ndarray) -> np.ndarray:
    array = np.array(data, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


class Operator(BaseModel):
    """
    Dense complex square matrix tagged with its tensor-factor dimensions
    """
    dims: Tuple[int, ...] = Field(..., description="Tensor-factor dimensions")
    data: np.ndarray = Field(..., description="Row-major dense complex matrix")

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
    )

    @field_validator("dims", mode="before")
    @classmethod
    def _check_dims(cls, value) -> Tuple[int, ...]:
        dims = tuple(int(d) for d in value)
        if not dims or any(d <= 0 for d in dims):
            raise DimensionError(f"Tensor-factor dimensions must be positive, got {dims}")
        return dims

    @field_validator("data", mode="before")
    @classmethod
    def _check_data(cls, value) -> np.ndarray:
        return _frozen_array(value)

    @model_validator(mode="after")
    def _check_shape(self) -> "Operator":
        side = prod(self.dims)
        if self.data.shape != (side, side):
            raise DimensionError(
                f"Matrix shape {self.data.shape} does not match dims {self.dims}"
            )
        if not np.all(np.isfinite(self.data)):
            raise OperatorValidationError("Operator has non-finite entries")
        return self

    @classmethod
    def from_array(cls, data, dims=None) -> "Operator":
        array = np.asarray(data, dtype=np.complex128)
        if dims is None:
            dims = (array.shape[0],)
        return cls(dims=dims, data=array)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def dagger(self) -> "Operator":
        return Operator(dims=self.dims, data=self.data.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.data)))

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.data - self.data.conj().T)))

    def is_hermitian(self, tol: float = None) -> bool:
        tol = settings.numerics.tol_herm if tol is None else tol
        return self.hermiticity_residual() <= tol

    def _require_same_dims(self, other: "Operator") -> None:
        if self.dims != other.dims:
            raise DimensionError(f"Operator dims {self.dims} and {other.dims} differ")

    def __matmul__(self, other: "Operator") -> "Operator":
        self._require_same_dims(other)
        return Operator(dims=self.dims, data=self.data @ other.data)

    def __add__(self, other: "Operator") -> "Operator":
        self._require_same_dims(other)
        return Operator(dims=self.dims, data=self.data + other.data)

    def __sub__(self, other: "Operator") -> "Operator":
        self._require_same_dims(other)
        return Operator(dims=self.dims, data=self.data - other.data)

    def __mul__(self, scalar: complex) -> "Operator":
        return Operator(dims=self.dims, data=self.data * scalar)

    __rmul__ = __mul__


class DensityOperator(BaseModel):
    """
    Hermitian, unit-trace, positive semidefinite operator
    """
    op: Operator

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_state(self) -> "DensityOperator":
        numerics = settings.numerics
        if self.op.hermiticity_residual() > numerics.tol_herm:
            raise OperatorValidationError(
                f"Density operator is not Hermitian (residual {self.op.hermiticity_residual():.2e})"
            )
        trace = self.op.trace()
        if abs(trace - 1.0) > numerics.tol_trace:
            raise OperatorValidationError(f"Density operator trace {trace.real:.12g} != 1")
        min_eig = float(np.linalg.eigvalsh(self.op.data)[0])
        if min_eig < -numerics.tol_psd:
            raise OperatorValidationError(f"Density operator has negative eigenvalue {min_eig:.3e}")
        return self

    @classmethod
    def from_matrix(cls, data, dims) -> "DensityOperator":
        """Build a state from a numerically Hermitian matrix, removing round-off asymmetry"""
        array = np.asarray(data, dtype=np.complex128)
        hermitian = 0.5 * (array + array.conj().T)
        residual = float(np.max(np.abs(array - array.conj().T)))
        if residual > settings.numerics.tol_herm:
            raise OperatorValidationError(
                f"Density operator is not Hermitian (residual {residual:.2e})"
            )
        return cls(op=Operator(dims=dims, data=hermitian))

    @classmethod
    def pure(cls, vector, dims=None) -> "DensityOperator":
        ket = np.asarray(vector, dtype=np.complex128).reshape(-1)
        ket = ket / np.linalg.norm(ket)
        return cls.from_matrix(np.outer(ket, ket.conj()), dims or (ket.shape[0],))

    @classmethod
    def maximally_mixed(cls, dims) -> "DensityOperator":
        side = prod(dims)
        return cls(op=Operator(dims=dims, data=np.eye(side) / side))

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.op.dims

    @property
    def data(self) -> np.ndarray:
        return self.op.data

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues clipped to [0, 1]"""
        return np.clip(np.linalg.eigvalsh(self.op.data), 0.0, 1.0)


class Spectrum(BaseModel):
    """
    Ascending eigenvalues with phase-fixed orthonormal eigenvectors (columns)
    """
    dims: Tuple[int, ...]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    degenerate: bool = Field(False, description="True if any numerically degenerate cluster exists")

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
    )

    @field_validator("eigenvalues", mode="before")
    @classmethod
    def _real_values(cls, value) -> np.ndarray:
        array = np.array(value, dtype=np.float64, copy=True)
        array.setflags(write=False)
        return array

    @field_validator("eigenvectors", mode="before")
    @classmethod
    def _vectors(cls, value) -> np.ndarray:
        return _frozen_array(value)

    def vector(self, index: int) -> np.ndarray:
        return self.eigenvectors[:, index]

    def projector(self, index: int) -> Operator:
        ket = self.eigenvectors[:, index]
        return Operator(dims=self.dims, data=np.outer(ket, ket.conj()))

    def __len__(self) -> int:
        return len(self.eigenvalues)


class ProtocolSegment(BaseModel):
    """
    One piecewise-constant stretch of the total Hamiltonian
    """
    duration: float = Field(..., gt=0, description="Segment length")
    generator: Operator = Field(..., description="Hamiltonian on the full space")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_generator(self) -> "ProtocolSegment":
        if not self.generator.is_hermitian():
            raise OperatorValidationError(
                f"Protocol generator is not Hermitian (residual {self.generator.hermiticity_residual():.2e})"
            )
        return self


class Protocol(BaseModel):
    """
    Ordered piecewise-constant Hamiltonian schedule
    """
    dims: Tuple[int, ...]
    segments: List[ProtocolSegment] = Field(default_factory=list)
    total_time: float = Field(0.0, ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_segments(self) -> "Protocol":
        elapsed = sum(segment.duration for segment in self.segments)
        if abs(elapsed - self.total_time) > 1e-12:
            raise OperatorValidationError(
                f"Segment durations sum to {elapsed!r}, expected total_time {self.total_time!r}"
            )
        for segment in self.segments:
            if segment.generator.dims != tuple(self.dims):
                raise DimensionError(
                    f"Generator dims {segment.generator.dims} differ from protocol dims {self.dims}"
                )
        return self

    @classmethod
    def from_segments(cls, segments, dims=None) -> "Protocol":
        """Build from (duration, generator) pairs, summing the total time"""
        parts = [ProtocolSegment(duration=d, generator=g) for d, g in segments]
        if dims is None:
            if not parts:
                raise OperatorValidationError("Empty protocol needs explicit dims")
            dims = parts[0].generator.dims
        total = 0.0
        for part in parts:
            total += part.duration
        return cls(dims=dims, segments=parts, total_time=total)

    @property
    def is_empty(self) -> bool:
        return not self.segments


class ChoiReport(BaseModel):
    """
    Complete-positivity and trace-preservation diagnostics of a channel
    """
    trace_preserving: bool
    trace_residual: float = Field(..., description="max |Tr_out J - I| entry")
    min_choi_eigenvalue: float
    kraus_completeness_residual: float = Field(..., description="max |sum K^dag K - I| entry")
