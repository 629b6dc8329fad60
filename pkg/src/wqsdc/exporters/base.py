"""Base exporter interface for reports, transcripts and sweep tables."""

from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any


class Exporter(ABC):
    """Base class for file exporters."""

    @property
    @abstractmethod
    def extension(self) -> str:
        """File extension without dot (e.g., 'json', 'csv')."""
        ...

    @abstractmethod
    def export(self, payload: Any, output_path: Path) -> int:
        """Write payload to file.

        Args:
            payload: Object with ``to_dict()``, or a plain mapping.
            output_path: Path to output file.

        Returns:
            Number of records written.
        """
        ...

    @staticmethod
    def payload_to_dict(payload: Any) -> dict:
        """Convert a payload to an exportable dictionary."""
        if isinstance(payload, dict):
            return payload
        to_dict = getattr(payload, "to_dict", None)
        if to_dict is None:
            raise TypeError(f"Cannot export {type(payload).__name__}: no to_dict()")
        return to_dict()

    @staticmethod
    def record_count(data: dict) -> int:
        """Length of the first list-valued record field, else 1."""
        for key in ("rows", "events", "entries"):
            value = data.get(key)
            if isinstance(value, list):
                return len(value)
        return 1
