"""File exporters for JSON, YAML, CSV and SVG outputs."""

from wqsdc.exporters.base import Exporter
from wqsdc.exporters.csv_exporter import CsvExporter
from wqsdc.exporters.json_exporter import JsonExporter
from wqsdc.exporters.svg_exporter import LAYOUTS, PlotLayout, SvgExporter
from wqsdc.exporters.yaml_exporter import YamlExporter

__all__ = [
    "Exporter",
    "CsvExporter",
    "JsonExporter",
    "LAYOUTS",
    "PlotLayout",
    "SvgExporter",
    "YamlExporter",
    "get_exporter",
]


def get_exporter(fmt: str) -> Exporter:
    """Structured exporter for ``--format``."""
    if fmt == "yaml":
        return YamlExporter()
    return JsonExporter()
