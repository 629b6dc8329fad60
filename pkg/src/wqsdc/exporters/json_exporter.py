"""JSON exporter."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from wqsdc.exporters.base import Exporter


class JsonExporter(Exporter):
    """Export payloads as indented JSON with keys in insertion order."""

    @property
    def extension(self) -> str:
        return "json"

    def export(self, payload: Any, output_path: Path) -> int:
        """Write the payload as JSON.

        Args:
            payload: Object with ``to_dict()``, or a plain mapping.
            output_path: Path to the JSON file.

        Returns:
            Number of records written.
        """
        data = self.payload_to_dict(payload)
        with open(output_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=False)
            f.write("\n")
        return self.record_count(data)
