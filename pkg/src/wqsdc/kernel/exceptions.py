"""Kernel-specific exceptions."""

from __future__ import annotations


class KernelError(Exception):
    """Base exception for state-vector kernel operations."""


class DuplicateLabelError(KernelError):
    """Qubit label appears more than once in a state or selection."""

    def __init__(self, labels: tuple[str, ...] | list[str]) -> None:
        self.labels = tuple(labels)
        super().__init__(f"Duplicate qubit labels in {self.labels}")


class UnknownLabelError(KernelError):
    """Requested qubit label is not part of the state."""

    def __init__(self, label: str, available: tuple[str, ...]) -> None:
        self.label = label
        self.available = available
        super().__init__(f"Unknown qubit label '{label}' (have {available})")


class NonUnitaryError(KernelError):
    """Operator passed to apply_on is not unitary within tolerance."""

    def __init__(self, deviation: float) -> None:
        self.deviation = deviation
        super().__init__(f"Operator is not unitary (max |U^dag U - I| = {deviation:.3e})")


class NormalizationError(KernelError):
    """State flagged as normalized is too far from unit norm."""

    def __init__(self, norm: float) -> None:
        self.norm = norm
        super().__init__(f"State norm {norm:.12g} outside normalization tolerance")


class DimensionMismatchError(KernelError):
    """Operand dimensions do not agree."""


class EmptySelectionError(KernelError):
    """An operation was asked to keep or measure no qubits."""
