"""Protocol-specific exceptions."""

from __future__ import annotations


class ProtocolError(Exception):
    """Base exception for protocol operations."""


class InvalidParametersError(ProtocolError):
    """Secret or shared-state amplitudes fail their normalization check."""

    def __init__(self, what: str, total: float) -> None:
        self.what = what
        self.total = total
        super().__init__(f"{what} squared magnitudes sum to {total:.12g}, expected 1")


class UnknownBitsError(ProtocolError):
    """Classical bits outside the two-bit codebook."""

    def __init__(self, bits: str) -> None:
        self.bits = bits
        super().__init__(f"Unknown classical bits '{bits}' (expected one of 00, 01, 10, 11)")
