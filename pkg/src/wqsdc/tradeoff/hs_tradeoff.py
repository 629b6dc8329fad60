"""Average HS distance as a function of the success probability."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from wqsdc.tradeoff.exceptions import TradeoffError
from wqsdc.tradeoff.fill_tradeoff import fill_from_ps

LOGGER = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9
WINDOW_TOLERANCE = 1e-12
DISCRIMINANT_TOLERANCE = 1e-12

# Smallest beta^2 for which the sub-1/3 window is non-empty.
WINDOW_THRESHOLD = (3.0 - math.sqrt(2.0)) / 2.0


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise TradeoffError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def dbar_from_ps(ps: float, beta_sq: float, alpha_sq: float, gamma_sq: float) -> float:
    """1/3 + 4/3 ((1 - b + ps/2)^2 + ps^2/4 - ps/2) / ((1 + 2g)^2 (1 + 2a)^2).

    ``ps`` is a free coordinate here; it only equals 4 alpha^2 gamma^2 on the
    constrained surface.
    """
    ps = _check_unit("ps", ps)
    b = _check_unit("beta_sq", beta_sq)
    a = _check_unit("alpha_sq", alpha_sq)
    g = _check_unit("gamma_sq", gamma_sq)
    numerator = (1.0 - b + ps / 2.0) ** 2 + ps * ps / 4.0 - ps / 2.0
    denominator = (1.0 + 2.0 * g) ** 2 * (1.0 + 2.0 * a) ** 2
    return 4.0 / 3.0 * numerator / denominator + 1.0 / 3.0


def window_quadratic(ps: float, beta_sq: float) -> float:
    """Numerator of the excess over 1/3; negative exactly inside the window."""
    return ps * ps / 2.0 + ps * (0.5 - beta_sq) + (1.0 - beta_sq) ** 2


@dataclass(frozen=True)
class PsWindow:
    """Range of ps for which the average distance drops below 1/3."""

    beta_sq: float
    lo: float | None = None
    hi: float | None = None

    @property
    def empty(self) -> bool:
        return self.lo is None

    @property
    def width(self) -> float:
        if self.lo is None or self.hi is None:
            return 0.0
        return self.hi - self.lo

    def contains(self, ps: float) -> bool:
        if self.lo is None or self.hi is None:
            return False
        return self.lo <= ps <= self.hi

    def to_dict(self) -> dict:
        return {"beta_sq": self.beta_sq, "lo": self.lo, "hi": self.hi}


def ps_window(beta_sq: float) -> PsWindow:
    """Roots -(1/2 - b) -/+ sqrt(12 b - 4 b^2 - 7) / 2 of the window quadratic."""
    b = _check_unit("beta_sq", beta_sq)
    if b < WINDOW_THRESHOLD - WINDOW_TOLERANCE:
        return PsWindow(b)
    discriminant = 12.0 * b - 4.0 * b * b - 7.0
    if discriminant < DISCRIMINANT_TOLERANCE:
        LOGGER.debug("Clamping window discriminant %.3e at beta^2=%.15g", discriminant, b)
        discriminant = 0.0
    center = -(0.5 - b)
    half = 0.5 * math.sqrt(discriminant)
    return PsWindow(b, center - half, center + half)


def alpha_gamma_budget() -> tuple[float, float]:
    """Allowed range of alpha^2 + gamma^2 once beta^2 clears the window threshold."""
    return 0.0, 1.0 / math.sqrt(2.0) - 0.5


@dataclass(frozen=True)
class TradeoffPoint:
    """One (ps, beta^2) coordinate with its distance and fill values."""

    ps: float
    beta_sq: float
    alpha_sq: float | None = None
    gamma_sq: float | None = None
    dbar: float | None = None
    fill: float | None = None

    def validate(self) -> None:
        _check_unit("ps", self.ps)
        _check_unit("beta_sq", self.beta_sq)
        if (self.alpha_sq is None) != (self.gamma_sq is None):
            raise TradeoffError("alpha_sq and gamma_sq must be given together")
        if self.alpha_sq is None or self.gamma_sq is None:
            return
        total = _check_unit("alpha_sq", self.alpha_sq) + self.beta_sq
        total += _check_unit("gamma_sq", self.gamma_sq)
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise TradeoffError(f"Squared magnitudes sum to {total:.12g}, expected 1")

    @classmethod
    def at(
        cls,
        ps: float,
        beta_sq: float,
        alpha_sq: float | None = None,
        gamma_sq: float | None = None,
    ) -> TradeoffPoint:
        """Evaluate distance (when alpha and gamma are known) and fill at one point."""
        point = cls(ps, beta_sq, alpha_sq, gamma_sq)
        point.validate()
        dbar = None
        if alpha_sq is not None and gamma_sq is not None:
            dbar = dbar_from_ps(ps, beta_sq, alpha_sq, gamma_sq)
        return cls(ps, beta_sq, alpha_sq, gamma_sq, dbar, fill_from_ps(ps, beta_sq))

    @property
    def constrained(self) -> bool:
        """True when ps equals 4 alpha^2 gamma^2 for the stored magnitudes."""
        if self.alpha_sq is None or self.gamma_sq is None:
            return False
        return abs(self.ps - 4.0 * self.alpha_sq * self.gamma_sq) <= NORMALIZATION_TOLERANCE

    def to_dict(self) -> dict:
        return {
            "ps": self.ps,
            "beta_sq": self.beta_sq,
            "alpha_sq": self.alpha_sq,
            "gamma_sq": self.gamma_sq,
            "dbar": self.dbar,
            "fill": self.fill,
        }
