"""Measurement bases."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from wqsdc.kernel.exceptions import KernelError

_ORTHONORMAL_TOL = 1e-12

SQRT_HALF = 1.0 / np.sqrt(2.0)

# Outcome order for the Bell basis; indices are used throughout the protocol.
BELL_LABELS = ("phi+", "phi-", "psi+", "psi-")


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """Named orthonormal basis; row ``i`` of ``projectors`` is outcome ``i``."""

    name: str
    projectors: np.ndarray
    outcome_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        vectors = np.asarray(self.projectors, dtype=np.complex128)
        dim = vectors.shape[1]
        if vectors.shape[0] != dim or dim & (dim - 1):
            raise KernelError(f"Basis '{self.name}' is not complete: shape {vectors.shape}")
        gram = vectors.conj() @ vectors.T
        if np.max(np.abs(gram - np.eye(dim))) > _ORTHONORMAL_TOL:
            raise KernelError(f"Basis '{self.name}' is not orthonormal")
        if len(self.outcome_labels) != dim:
            raise KernelError(f"Basis '{self.name}' needs {dim} outcome labels")

    @property
    def num_qubits(self) -> int:
        return int(np.log2(self.projectors.shape[1]))

    def index_of(self, outcome: str) -> int:
        return self.outcome_labels.index(outcome)


@lru_cache(maxsize=None)
def computational_basis(num_qubits: int = 1) -> MeasurementBasis:
    dim = 2**num_qubits
    labels = tuple(format(i, f"0{num_qubits}b") for i in range(dim))
    return MeasurementBasis("computational", np.eye(dim, dtype=np.complex128), labels)


@lru_cache(maxsize=None)
def bell_basis() -> MeasurementBasis:
    """phi+- = (|00> +- |11>)/sqrt2, psi+- = (|01> +- |10>)/sqrt2."""
    vectors = SQRT_HALF * np.array(
        [
            [1, 0, 0, 1],
            [1, 0, 0, -1],
            [0, 1, 1, 0],
            [0, 1, -1, 0],
        ],
        dtype=np.complex128,
    )
    return MeasurementBasis("bell", vectors, BELL_LABELS)


def get_basis(name: str, num_qubits: int) -> MeasurementBasis:
    if name == "bell":
        if num_qubits != 2:
            raise KernelError("Bell basis spans exactly two qubits")
        return bell_basis()
    if name == "computational":
        return computational_basis(num_qubits)
    raise KernelError(f"Unknown basis '{name}'")
