"""Analytic tradeoffs between success probability, distance and fill."""

from wqsdc.tradeoff.exceptions import FillOutOfRangeError, GridSpecError, TradeoffError
from wqsdc.tradeoff.figures import (
    FIG1_COLUMNS,
    FIG2_COLUMNS,
    FIG3_COLUMNS,
    GridSpec,
    SweepTable,
    figure_series,
    format_value,
)
from wqsdc.tradeoff.fill_tradeoff import (
    FILL_CEILING,
    CardanoTrace,
    FillBounds,
    PsSolution,
    cardano_root,
    cardano_trace,
    cfill_components,
    cubic_residual,
    fill_bounds,
    fill_from_ps,
    ps_from_fill,
)
from wqsdc.tradeoff.hs_tradeoff import (
    WINDOW_THRESHOLD,
    PsWindow,
    TradeoffPoint,
    alpha_gamma_budget,
    dbar_from_ps,
    ps_window,
    window_quadratic,
)

__all__ = [
    # Exceptions
    "FillOutOfRangeError",
    "GridSpecError",
    "TradeoffError",
    # Figures
    "FIG1_COLUMNS",
    "FIG2_COLUMNS",
    "FIG3_COLUMNS",
    "GridSpec",
    "SweepTable",
    "figure_series",
    "format_value",
    # Fill tradeoff
    "FILL_CEILING",
    "CardanoTrace",
    "FillBounds",
    "PsSolution",
    "cardano_root",
    "cardano_trace",
    "cfill_components",
    "cubic_residual",
    "fill_bounds",
    "fill_from_ps",
    "ps_from_fill",
    # Distance tradeoff
    "WINDOW_THRESHOLD",
    "PsWindow",
    "TradeoffPoint",
    "alpha_gamma_budget",
    "dbar_from_ps",
    "ps_window",
    "window_quadratic",
]
