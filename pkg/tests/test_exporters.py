"""Tests for the JSON, YAML, CSV and SVG exporters."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
import yaml

from wqsdc.exporters import (
    CsvExporter,
    Exporter,
    JsonExporter,
    PlotLayout,
    SvgExporter,
    YamlExporter,
    get_exporter,
)
from wqsdc.protocol import run_protocol
from wqsdc.tradeoff import GridSpec, SweepTable, figure_series


@pytest.fixture
def table() -> SweepTable:
    return figure_series("fig3", GridSpec(points=5, beta_values=[0.05, 0.1]))


class TestExporterBase:
    def test_payload_to_dict(self, run_config):
        transcript = run_protocol(run_config)
        assert Exporter.payload_to_dict(transcript)["attempts"] == transcript.attempts
        assert Exporter.payload_to_dict({"a": 1}) == {"a": 1}
        with pytest.raises(TypeError):
            Exporter.payload_to_dict(42)

    def test_record_count(self):
        assert Exporter.record_count({"rows": [1, 2, 3]}) == 3
        assert Exporter.record_count({"events": [1]}) == 1
        assert Exporter.record_count({"value": 2}) == 1

    def test_get_exporter(self):
        assert isinstance(get_exporter("yaml"), YamlExporter)
        assert isinstance(get_exporter("json"), JsonExporter)


class TestJsonExporter:
    """Tests for JsonExporter."""

    def test_extension(self):
        assert JsonExporter().extension == "json"

    def test_transcript(self, run_config, tmp_path: Path):
        path = tmp_path / "transcript.json"
        transcript = run_protocol(run_config)
        count = JsonExporter().export(transcript, path)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert count == len(transcript.events)
        assert data["outcome"] == "succeeded"
        assert data["config"]["secret"]["a"] == [0.6, 0.0]
        assert path.read_text(encoding="utf-8").endswith("\n")


class TestYamlExporter:
    """Tests for YamlExporter."""

    def test_extension(self):
        assert YamlExporter().extension == "yaml"

    def test_keeps_key_order(self, table: SweepTable, tmp_path: Path):
        path = tmp_path / "table.yaml"
        assert YamlExporter().export(table, path) == 10
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
        assert list(data) == ["name", "columns", "rows", "warnings"]
        assert data["columns"] == ["beta_sq", "fill", "ps"]


class TestCsvExporter:
    def test_extension(self):
        assert CsvExporter().extension == "csv"

    def test_writes_table(self, table: SweepTable, tmp_path: Path):
        path = tmp_path / "fig3.csv"
        assert CsvExporter().export(table, path) == 10
        assert len(path.read_text(encoding="utf-8").splitlines()) == 11

    def test_rejects_other_payloads(self, tmp_path: Path):
        with pytest.raises(TypeError):
            CsvExporter().export({"rows": []}, tmp_path / "x.csv")


class TestSvgExporter:
    """Tests for SvgExporter."""

    def test_extension(self):
        assert SvgExporter().extension == "svg"

    def test_writes_svg(self, table: SweepTable, tmp_path: Path):
        path = tmp_path / "fig3.svg"
        assert SvgExporter().export(table, path) == 10
        text = path.read_text(encoding="utf-8")
        assert "<svg" in text

    def test_deterministic(self, table: SweepTable, tmp_path: Path):
        first, second = tmp_path / "a.svg", tmp_path / "b.svg"
        SvgExporter().export(table, first)
        SvgExporter().export(table, second)
        assert first.read_bytes() == second.read_bytes()

    def test_custom_layout(self, tmp_path: Path):
        table = SweepTable("custom", ("x", "y"), [(0.0, 1.0), (1.0, 0.0)])
        path = tmp_path / "custom.svg"
        SvgExporter(PlotLayout("x", ("y",))).export(table, path)
        assert path.exists()

    def test_rejects_other_payloads(self, tmp_path: Path):
        with pytest.raises(TypeError):
            SvgExporter().export({"rows": []}, tmp_path / "x.svg")
