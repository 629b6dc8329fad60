"""YAML exporter."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from wqsdc.exporters.base import Exporter


class YamlExporter(Exporter):
    """Export payloads through ``yaml.safe_dump``."""

    @property
    def extension(self) -> str:
        return "yaml"

    def export(self, payload: Any, output_path: Path) -> int:
        """Write the payload as YAML.

        Args:
            payload: Object with ``to_dict()``, or a plain mapping.
            output_path: Path to the YAML file.

        Returns:
            Number of records written.
        """
        data = self.payload_to_dict(payload)
        with open(output_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(data, f, allow_unicode=True, sort_keys=False)
        return self.record_count(data)
