"""CSV exporter for sweep tables."""

from __future__ import annotations

from pathlib import Path

from wqsdc.exporters.base import Exporter
from wqsdc.tradeoff import SweepTable


class CsvExporter(Exporter):
    """Header row then data rows, 12 significant digits."""

    @property
    def extension(self) -> str:
        return "csv"

    def export(self, payload: SweepTable, output_path: Path) -> int:
        """Write the table as CSV.

        Args:
            payload: Table to write.
            output_path: Path to the CSV file.

        Returns:
            Number of data rows written.

        Raises:
            TypeError: If ``payload`` is not a ``SweepTable``.
        """
        if not isinstance(payload, SweepTable):
            raise TypeError(f"CsvExporter needs a SweepTable, got {type(payload).__name__}")
        return payload.to_csv(output_path)
