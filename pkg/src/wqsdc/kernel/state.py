"""State vectors and density matrices over labelled qubits.

Ordering convention: big-endian by label order. The first label is the most
significant bit of the amplitude index, so ``labels=("a", "b")`` stores
``|ab>`` at index ``2*a + b``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from wqsdc.kernel.exceptions import (
    DimensionMismatchError,
    DuplicateLabelError,
    KernelError,
    NormalizationError,
    UnknownLabelError,
)

LOGGER = logging.getLogger(__name__)

# States within this distance of unit norm are renormalized silently.
NORM_TOLERANCE = 1e-6

# Deviations below this are left as they are.
_RENORM_FLOOR = 4 * np.finfo(float).eps


def _check_labels(labels: Iterable[str]) -> tuple[str, ...]:
    result = tuple(str(label) for label in labels)
    if len(set(result)) != len(result):
        raise DuplicateLabelError(result)
    return result


@dataclass(eq=False)
class StateVector:
    """Complex amplitude vector over an ordered list of qubit labels.

    ``normalized=False`` marks a raw vector (e.g. the image of the
    paper-literal cloner). Raw vectors skip the norm check, and measurement
    reads their probabilities as raw squared amplitudes.
    """

    labels: tuple[str, ...]
    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self) -> None:
        self.labels = _check_labels(self.labels)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 2 ** len(self.labels):
            raise DimensionMismatchError(
                f"{amps.size} amplitudes for {len(self.labels)} qubits"
            )
        if not np.all(np.isfinite(amps)):
            raise KernelError("State contains non-finite amplitudes")
        if self.normalized:
            norm = float(np.linalg.norm(amps))
            if abs(norm - 1.0) > NORM_TOLERANCE:
                raise NormalizationError(norm)
            if abs(norm - 1.0) > _RENORM_FLOOR:
                if abs(norm - 1.0) > 1e-12:
                    LOGGER.warning("Renormalizing state (norm=%.12g)", norm)
                amps = amps / norm
        self.amplitudes = amps

    @property
    def num_qubits(self) -> int:
        return len(self.labels)

    @property
    def squared_norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def tensor_view(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per qubit."""
        return self.amplitudes.reshape([2] * self.num_qubits)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label, self.labels) from None

    def renormalized(self) -> StateVector:
        """Return a normalized copy (raw vectors are divided by their norm)."""
        norm = np.sqrt(self.squared_norm)
        if norm == 0.0:
            raise NormalizationError(0.0)
        return StateVector(self.labels, self.amplitudes / norm, normalized=True)

    def dump(self) -> str:
        """Debug dump: one ``index<TAB>re<TAB>im`` line per amplitude."""
        return "\n".join(
            f"{index}\t{amp.real:.17g}\t{amp.imag:.17g}"
            for index, amp in enumerate(self.amplitudes)
        )


def _default_labels(num_qubits: int) -> tuple[str, ...]:
    return tuple(f"q{i}" for i in range(num_qubits))


@dataclass(eq=False)
class DensityMatrix:
    """Square complex matrix over labelled qubits."""

    entries: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatchError(f"Density matrix must be square, got {entries.shape}")
        num_qubits = int(round(np.log2(entries.shape[0]))) if entries.shape[0] else 0
        if 2**num_qubits != entries.shape[0]:
            raise DimensionMismatchError(f"Dimension {entries.shape[0]} is not a power of two")
        labels = _check_labels(self.labels) if self.labels else _default_labels(num_qubits)
        if len(labels) != num_qubits:
            raise DimensionMismatchError(
                f"{len(labels)} labels for a {entries.shape[0]}-dimensional matrix"
            )
        self.entries = entries
        self.labels = labels

    @classmethod
    def from_state(cls, state: StateVector) -> DensityMatrix:
        amps = state.amplitudes
        return cls(np.outer(amps, amps.conj()), state.labels)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0))

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return self.hermiticity_error() <= tol

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)


def basis_state(bits: str | Sequence[int], labels: Sequence[str] | None = None) -> StateVector:
    """Computational basis state, e.g. ``basis_state("01")``."""
    bit_list = [int(b) for b in bits]
    labels = tuple(labels) if labels is not None else _default_labels(len(bit_list))
    amps = np.zeros(2 ** len(bit_list), dtype=np.complex128)
    index = int("".join(str(b) for b in bit_list), 2) if bit_list else 0
    amps[index] = 1.0
    return StateVector(labels, amps)


def make_rng(seed: int | None) -> np.random.Generator:
    """The only source of randomness: an explicit seeded generator."""
    return np.random.default_rng(seed)


def random_state(
    num_qubits: int,
    rng: np.random.Generator,
    labels: Sequence[str] | None = None,
) -> StateVector:
    """Haar-like random pure state from complex Gaussian amplitudes."""
    dim = 2**num_qubits
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    amps /= np.linalg.norm(amps)
    labels = tuple(labels) if labels is not None else _default_labels(num_qubits)
    return StateVector(labels, amps)
