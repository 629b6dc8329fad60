"""Entanglement-measure exceptions."""

from __future__ import annotations


class EntanglementError(Exception):
    """Base exception for entanglement measures."""


class QubitCountError(EntanglementError):
    """Three-qubit measure applied to a state of another size."""

    def __init__(self, count: int) -> None:
        self.count = count
        super().__init__(f"Expected a three-qubit state, got {count} qubits")


class BrokenTripleError(EntanglementError):
    """Squared concurrences do not form a valid triple (negative radicand or entry)."""

    def __init__(self, quantity: str, value: float) -> None:
        self.quantity = quantity
        self.value = value
        super().__init__(f"{quantity} = {value:.3e} is negative beyond tolerance")


class InvalidFamilyIndexError(EntanglementError):
    """W_n family index below 1."""

    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(f"W_n family index must be a positive integer, got {n!r}")
