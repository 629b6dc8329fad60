"""Figure data series as sweep tables."""

from __future__ import annotations

import csv
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import numpy as np

from wqsdc.entanglement import wn_fill
from wqsdc.tradeoff.exceptions import GridSpecError, TradeoffError
from wqsdc.tradeoff.fill_tradeoff import fill_bounds, ps_from_fill
from wqsdc.tradeoff.hs_tradeoff import dbar_from_ps

LOGGER = logging.getLogger(__name__)

FigureId = Literal["fig1", "fig2", "fig3"]

SIGNIFICANT_DIGITS = 12
TRIPLE_TOLERANCE = 1e-6
FIG3_BETA_RANGE = (0.0, 0.17)

FIG1_COLUMNS = ("ps", "dbar", "alpha_sq", "beta_sq", "gamma_sq", "reference")
FIG2_COLUMNS = ("n", "fill")
FIG3_COLUMNS = ("beta_sq", "fill", "ps")


def format_value(value: float) -> str:
    """Format a table value to the fixed number of significant digits."""
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


@dataclass
class SweepTable:
    """Named columns of floats with rows in grid order."""

    name: str
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def append(self, row: Sequence[float]) -> None:
        if len(row) != len(self.columns):
            raise TradeoffError(
                f"Row has {len(row)} values, table '{self.name}' has {len(self.columns)} columns"
            )
        self.rows.append(tuple(float(v) for v in row))

    def column(self, name: str) -> np.ndarray:
        try:
            index = self.columns.index(name)
        except ValueError:
            raise TradeoffError(f"Table '{self.name}' has no column '{name}'") from None
        return np.array([row[index] for row in self.rows])

    def formatted_rows(self) -> list[list[str]]:
        return [[format_value(v) for v in row] for row in self.rows]

    def to_csv(self, path: Path) -> int:
        """Write header plus rows; returns the row count."""
        path = Path(path)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(self.formatted_rows())
        return len(self.rows)

    @classmethod
    def from_csv(cls, path: Path, name: str | None = None) -> SweepTable:
        path = Path(path)
        with open(path, encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None:
                raise TradeoffError(f"Empty CSV file: {path}")
            table = cls(name or path.stem, tuple(header))
            for row in reader:
                table.append([float(v) for v in row])
        return table

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "columns": list(self.columns),
            "rows": [list(row) for row in self.rows],
            "warnings": list(self.warnings),
        }


@dataclass
class GridSpec:
    """Sweep grid for one figure.

    fig1 uses ``triples`` and ``points``; fig2 uses ``n_max``; fig3 uses
    ``beta_values`` and ``points``.
    """

    triples: list[tuple[float, float, float]] = field(
        default_factory=lambda: [(0.1, 0.8, 0.1)]
    )
    points: int = 101
    n_max: int = 10
    beta_values: list[float] = field(default_factory=lambda: [0.017, 0.05, 0.1, 0.17])
    workers: int = 1

    def validate(self, fig: FigureId) -> None:
        if self.workers < 1:
            raise GridSpecError("workers", f"must be >= 1, got {self.workers}")
        if fig == "fig1":
            self._check_points()
            if not self.triples:
                raise GridSpecError("triples", "at least one (alpha^2, beta^2, gamma^2) triple")
            for triple in self.triples:
                _check_triple(triple)
        elif fig == "fig2":
            if self.n_max < 1:
                raise GridSpecError("n_max", f"must be >= 1, got {self.n_max}")
        elif fig == "fig3":
            self._check_points()
            if not self.beta_values:
                raise GridSpecError("beta_values", "at least one beta^2 value")
        else:
            raise GridSpecError("fig", f"unknown figure '{fig}'")

    def _check_points(self) -> None:
        if self.points < 2:
            raise GridSpecError("points", f"must be >= 2, got {self.points}")


def _check_triple(triple: Sequence[float]) -> None:
    if len(triple) != 3:
        raise GridSpecError("triples", f"expected three values, got {len(triple)}")
    for value in triple:
        if not 0.0 <= value <= 1.0:
            raise GridSpecError("triples", f"{value!r} outside [0, 1]")
    total = sum(triple)
    if abs(total - 1.0) > TRIPLE_TOLERANCE:
        raise GridSpecError("triples", f"squared magnitudes sum to {total:.12g}, expected 1")


def _fig1(grid: GridSpec) -> SweepTable:
    table = SweepTable("fig1", FIG1_COLUMNS)
    ps_values = np.linspace(0.0, 1.0, grid.points)
    for alpha_sq, beta_sq, gamma_sq in grid.triples:
        for ps in ps_values:
            dbar = dbar_from_ps(float(ps), beta_sq, alpha_sq, gamma_sq)
            table.append((ps, dbar, alpha_sq, beta_sq, gamma_sq, 1.0 / 3.0))
    return table


def _fig2(grid: GridSpec) -> SweepTable:
    table = SweepTable("fig2", FIG2_COLUMNS)
    for n in range(1, grid.n_max + 1):
        table.append((n, wn_fill(n)))
    return table


def _fig3_block(beta_sq: float, points: int) -> tuple[list[tuple[float, ...]], str | None]:
    lo, hi = FIG3_BETA_RANGE
    if not lo < beta_sq <= hi:
        message = f"beta^2={beta_sq:.12g} outside ({lo}, {hi}]; row left empty"
        return [(beta_sq, math.nan, math.nan)], message
    bounds = fill_bounds(beta_sq)
    rows = []
    for fill in np.linspace(bounds.lower, bounds.capped_upper, points):
        solution = ps_from_fill(float(fill), beta_sq)
        rows.append((beta_sq, float(fill), solution.ps))
    return rows, None


def _fig3(grid: GridSpec) -> SweepTable:
    table = SweepTable("fig3", FIG3_COLUMNS)
    with ThreadPoolExecutor(max_workers=grid.workers) as executor:
        # map() yields in submission order, so rows keep grid order.
        blocks = executor.map(
            lambda b: _fig3_block(float(b), grid.points), grid.beta_values
        )
        for rows, warning in blocks:
            if warning is not None:
                LOGGER.warning("fig3: %s", warning)
                table.warnings.append(warning)
            for row in rows:
                table.append(row)
    return table


_BUILDERS = {"fig1": _fig1, "fig2": _fig2, "fig3": _fig3}


def figure_series(fig: FigureId, grid: GridSpec | None = None) -> SweepTable:
    """Build the data table for one figure.

    Args:
        fig: Which figure to build (``fig1``, ``fig2`` or ``fig3``).
        grid: Grid resolution and fig3 β² set. Defaults to ``GridSpec()``.

    Returns:
        The figure's columns with rows in grid order. Out-of-range fig3
        β² values yield NaN rows and a WARNING.

    Raises:
        GridSpecError: If the grid is invalid for ``fig``.
    """
    grid = grid or GridSpec()
    grid.validate(fig)
    table = _BUILDERS[fig](grid)
    LOGGER.info("Built %s: %d rows", fig, len(table.rows))
    return table
