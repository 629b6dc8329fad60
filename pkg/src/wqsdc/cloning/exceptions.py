"""Cloning-machine exceptions."""

from __future__ import annotations


class CloningError(Exception):
    """Base exception for cloning-machine operations."""


class InputRangeError(CloningError):
    """Input qubit or input parameter outside its admissible range."""

    def __init__(self, name: str, value: float, allowed: str) -> None:
        self.name = name
        self.value = value
        super().__init__(f"{name}={value!r} outside {allowed}")
