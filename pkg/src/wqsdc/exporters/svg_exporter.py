"""Poly-line SVG charts for sweep tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from wqsdc.exporters.base import Exporter  # noqa: E402
from wqsdc.tradeoff import SweepTable  # noqa: E402

LOGGER = logging.getLogger(__name__)

HASH_SALT = "wqsdc"


@dataclass(frozen=True)
class PlotLayout:
    x: str
    ys: tuple[str, ...]
    group_by: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None


LAYOUTS: dict[str, PlotLayout] = {
    "fig1": PlotLayout("ps", ("dbar", "reference"), "alpha_sq", "P_s", "average HS distance"),
    "fig2": PlotLayout("n", ("fill",), None, "n", "concurrence fill"),
    "fig3": PlotLayout("fill", ("ps",), "beta_sq", "concurrence fill", "P_s"),
    "sweep": PlotLayout(
        "alpha_sq",
        ("ps_analytic", "ps_literal", "ps_physical", "ps_monte_carlo"),
        None,
        "|alpha|^2",
        "P_s",
    ),
    "clone-analysis": PlotLayout(
        "m", ("da_analytic", "da_paper_diagonal", "da_exact"), None, "m", "D_a"
    ),
}


class SvgExporter(Exporter):
    """Render a SweepTable with matplotlib's SVG backend.

    The hash salt is fixed and the date is stripped so identical tables give
    identical files.
    """

    def __init__(self, layout: PlotLayout | None = None) -> None:
        self.layout = layout

    @property
    def extension(self) -> str:
        return "svg"

    def _layout_for(self, table: SweepTable) -> PlotLayout:
        if self.layout is not None:
            return self.layout
        if table.name in LAYOUTS:
            return LAYOUTS[table.name]
        return PlotLayout(table.columns[0], tuple(table.columns[1:]))

    def export(self, payload: SweepTable, output_path: Path) -> int:
        """Plot the table and write it as SVG.

        Args:
            payload: Figure table. Its name selects the plot layout.
            output_path: Path to the SVG file.

        Returns:
            Number of table rows plotted.

        Raises:
            TypeError: If ``payload`` is not a ``SweepTable``.
        """
        if not isinstance(payload, SweepTable):
            raise TypeError(f"SvgExporter needs a SweepTable, got {type(payload).__name__}")
        layout = self._layout_for(payload)
        x = payload.column(layout.x)
        groups = payload.column(layout.group_by) if layout.group_by else None

        with matplotlib.rc_context({"svg.hashsalt": HASH_SALT}):
            fig, ax = plt.subplots(figsize=(6.4, 4.8))
            try:
                keys = [None] if groups is None else list(dict.fromkeys(groups.tolist()))
                for key in keys:
                    mask = np.ones(len(x), dtype=bool) if key is None else groups == key
                    for name in layout.ys:
                        label = name if key is None else f"{name} ({layout.group_by}={key:.6g})"
                        ax.plot(x[mask], payload.column(name)[mask], label=label, linewidth=1.2)
                ax.set_xlabel(layout.xlabel or layout.x)
                ax.set_ylabel(layout.ylabel or ", ".join(layout.ys))
                ax.set_title(payload.name)
                ax.legend(fontsize="small")
                fig.savefig(output_path, format="svg", metadata={"Date": None})
            finally:
                plt.close(fig)
        LOGGER.info("Wrote SVG chart %s", output_path)
        return len(payload.rows)
