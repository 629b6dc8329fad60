"""Tradeoff-analysis exceptions."""

from __future__ import annotations


class TradeoffError(Exception):
    """Base exception for tradeoff formulas and solvers."""


class FillOutOfRangeError(TradeoffError):
    """Concurrence fill has no success probability in [0, 1] at this beta^2."""

    def __init__(self, fill: float, beta_sq: float, bounds: tuple[float, float]) -> None:
        self.fill = fill
        self.beta_sq = beta_sq
        self.bounds = bounds
        lo, hi = bounds
        super().__init__(
            f"Fill {fill:.12g} outside [{lo:.12g}, {hi:.12g}] at beta^2={beta_sq:.12g}"
        )


class GridSpecError(TradeoffError):
    """Invalid sweep grid."""

    def __init__(self, field: str, reason: str) -> None:
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid grid field '{field}': {reason}")
