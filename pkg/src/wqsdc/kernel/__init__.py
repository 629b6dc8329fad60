"""Dense state-vector kernel for up to a handful of qubits."""

from wqsdc.kernel.bases import (
    BELL_LABELS,
    MeasurementBasis,
    bell_basis,
    computational_basis,
    get_basis,
)
from wqsdc.kernel.exceptions import (
    DimensionMismatchError,
    DuplicateLabelError,
    EmptySelectionError,
    KernelError,
    NonUnitaryError,
    NormalizationError,
    UnknownLabelError,
)
from wqsdc.kernel.gates import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z
from wqsdc.kernel.metrics import equal_up_to_global_phase, fidelity, hs_distance
from wqsdc.kernel.ops import MeasurementRecord, apply_on, measure, partial_trace, tensor
from wqsdc.kernel.state import (
    NORM_TOLERANCE,
    DensityMatrix,
    StateVector,
    basis_state,
    make_rng,
    random_state,
)

__all__ = [
    # Bases
    "BELL_LABELS",
    "MeasurementBasis",
    "bell_basis",
    "computational_basis",
    "get_basis",
    # Exceptions
    "DimensionMismatchError",
    "DuplicateLabelError",
    "EmptySelectionError",
    "KernelError",
    "NonUnitaryError",
    "NormalizationError",
    "UnknownLabelError",
    # Gates
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    # Metrics
    "equal_up_to_global_phase",
    "fidelity",
    "hs_distance",
    # Operations
    "MeasurementRecord",
    "apply_on",
    "measure",
    "partial_trace",
    "tensor",
    # States
    "NORM_TOLERANCE",
    "DensityMatrix",
    "StateVector",
    "basis_state",
    "make_rng",
    "random_state",
]
