"""Concurrence fill in terms of the success probability, and its inversion.

Writing C^2 = 4 beta^2 (1 - beta^2) for the middle qubit's squared
concurrence, the fill satisfies

    P^3 + C^2 P^2 - 3 F^4 / (64 beta^4) = 0,

which has exactly one positive root for F > 0. The numeric solver brackets it
in [0, 1 + 1e-9], bisects and finishes with one Newton step. The printed
closed form (u^3 + v^3 without cube roots) is kept only so the errata report
can show its residual; ``cardano_root`` is the corrected reference.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import optimize

from wqsdc.entanglement import ConcurrenceTriple
from wqsdc.protocol.models import WStateParams
from wqsdc.tradeoff.exceptions import FillOutOfRangeError, TradeoffError

LOGGER = logging.getLogger(__name__)

SolveMethod = Literal["numeric", "paper_closed_form"]

BRACKET_EPS = 1e-9
BISECT_XTOL = 1e-14
BOUND_TOLERANCE = 1e-12
# Balanced W-state fill, used as the ceiling on swept fills.
FILL_CEILING = 0.88889


def fill_from_ps(ps: float, beta_sq: float) -> float:
    """(64/3 ps^2 beta^4 (ps + 4 beta^2 - 4 beta^4))^(1/4)."""
    b = float(beta_sq)
    radicand = 64.0 / 3.0 * ps * ps * b * b * (ps + 4.0 * b - 4.0 * b * b)
    return max(radicand, 0.0) ** 0.25


def cfill_components(ps: float, params: WStateParams) -> ConcurrenceTriple:
    """Squared concurrences rewritten through ps = 4 alpha^2 gamma^2."""
    a, b, g = params.squared
    if a == 0.0 or g == 0.0:
        raise TradeoffError("cfill_components needs nonzero alpha and gamma")
    return ConcurrenceTriple(
        ps * (1.0 - g) / a,
        4.0 * b * (1.0 - b),
        ps * (1.0 - a) / g,
    )


def _middle_sq(beta_sq: float) -> float:
    return 4.0 * beta_sq * (1.0 - beta_sq)


def _constant(fill: float, beta_sq: float) -> float:
    return 3.0 * fill**4 / (64.0 * beta_sq * beta_sq)


def cubic_residual(ps: float, fill: float, beta_sq: float) -> float:
    """Value of ps^3 + 4b(1 - b) ps^2 - 3 fill^4 / (64 b^2) at ``ps``."""
    c2 = _middle_sq(beta_sq)
    return ps**3 + c2 * ps * ps - _constant(fill, beta_sq)


@dataclass(frozen=True)
class FillBounds:
    """Printed lower and upper fill bounds at one beta^2."""

    beta_sq: float
    lower: float
    upper: float
    capped_upper: float

    def contains(self, fill: float, tol: float = BOUND_TOLERANCE) -> bool:
        return self.lower - tol <= fill <= self.upper + tol

    def to_dict(self) -> dict:
        return {
            "beta_sq": self.beta_sq,
            "lower": self.lower,
            "upper": self.upper,
            "capped_upper": self.capped_upper,
        }


def _check_beta(beta_sq: float) -> float:
    b = float(beta_sq)
    if not 0.0 < b < 1.0:
        raise TradeoffError(f"beta_sq must lie in (0, 1), got {b!r}")
    return b


def fill_bounds(beta_sq: float) -> FillBounds:
    b = _check_beta(beta_sq)
    core = b**5 * (1.0 - b) ** 3
    lower = (16384.0 / 81.0 * core) ** 0.25
    upper = (8192.0 / 81.0 * core + 64.0 / 3.0 * b * b) ** 0.25
    return FillBounds(b, lower, upper, min(upper, FILL_CEILING))


@dataclass(frozen=True)
class PsSolution:
    ps: float
    residual: float
    method: SolveMethod
    fill: float
    beta_sq: float

    def to_dict(self) -> dict:
        return {
            "ps": self.ps,
            "residual": self.residual,
            "method": self.method,
            "fill": self.fill,
            "beta_sq": self.beta_sq,
        }


def _numeric_root(fill: float, beta_sq: float) -> float:
    c2 = _middle_sq(beta_sq)
    k = _constant(fill, beta_sq)

    def f(p: float) -> float:
        return p**3 + c2 * p * p - k

    hi = 1.0 + BRACKET_EPS
    if f(hi) < 0.0:
        raise FillOutOfRangeError(fill, beta_sq, (0.0, fill_from_ps(1.0, beta_sq)))
    root = optimize.bisect(f, 0.0, hi, xtol=BISECT_XTOL)
    slope = 3.0 * root * root + 2.0 * c2 * root
    if slope > 0.0:
        polished = root - f(root) / slope
        if 0.0 <= polished <= hi and abs(f(polished)) <= abs(f(root)):
            root = polished
    return root


def ps_from_fill(
    fill: float,
    beta_sq: float,
    method: SolveMethod = "numeric",
    enforce_bounds: bool = False,
) -> PsSolution:
    """Invert the fill relation for ps.

    Args:
        fill: Concurrence fill to invert. Must be non-negative.
        beta_sq: The fixed |β|².
        method: ``numeric`` brackets the root on [0, 1].
            ``paper_closed_form`` evaluates the printed u^3 + v^3 root.
        enforce_bounds: Require ``fill`` to lie within
            ``fill_bounds(beta_sq)``.

    Returns:
        The root with its cubic residual and the method that produced it.

    Raises:
        FillOutOfRangeError: If the bounds are enforced and violated, or
            if the numeric root exceeds 1.
        TradeoffError: If ``fill`` is negative, ``beta_sq`` is invalid or
            ``method`` is unknown.
    """
    b = _check_beta(beta_sq)
    fill = float(fill)
    if fill < 0.0:
        raise TradeoffError(f"fill must be non-negative, got {fill!r}")
    if enforce_bounds:
        bounds = fill_bounds(b)
        if not bounds.contains(fill):
            raise FillOutOfRangeError(fill, b, (bounds.lower, bounds.upper))

    if method == "numeric":
        ps = 0.0 if fill == 0.0 else _numeric_root(fill, b)
    elif method == "paper_closed_form":
        ps = cardano_trace(fill, b).paper_root
    else:
        raise TradeoffError(f"Unknown inversion method '{method}'")
    residual = cubic_residual(ps, fill, b)
    LOGGER.debug("ps_from_fill(%s) F=%.12g b=%.12g -> %.15g (r=%.3e)", method, fill, b, ps, residual)
    return PsSolution(ps, residual, method, fill, b)


@dataclass(frozen=True)
class CardanoTrace:
    """Intermediate quantities of the printed Cardano derivation.

    ``u3`` and ``v3`` are complex when the discriminant is negative; their sum
    stays real.
    """

    a0: float
    a1: float
    a2: float
    a3: float
    H: float
    G: float
    discriminant: float
    u3: complex
    v3: complex
    paper_root: float

    def to_dict(self) -> dict:
        return {
            "a0": self.a0,
            "a1": self.a1,
            "a2": self.a2,
            "a3": self.a3,
            "H": self.H,
            "G": self.G,
            "discriminant": self.discriminant,
            "u3": [self.u3.real, self.u3.imag],
            "v3": [self.v3.real, self.v3.imag],
            "paper_root": self.paper_root,
        }


def cardano_trace(fill: float, beta_sq: float) -> CardanoTrace:
    """Coefficients of a0 x^3 + 3 a1 x^2 + 3 a2 x + a3 and the printed root u^3 + v^3."""
    b = _check_beta(beta_sq)
    c2 = _middle_sq(b)
    a0, a1, a2 = 1.0, c2 / 3.0, 0.0
    a3 = -_constant(fill, b)
    h = -(c2 * c2) / 9.0
    g = a3 + 2.0 * a1**3
    discriminant = (9.0 / 4096.0) * fill**8 / b**4 - (12.0 / 1728.0) * (fill**4 / b**2) * c2**3
    root = np.sqrt(complex(discriminant))
    u3 = complex((-g + root) / 2.0)
    v3 = complex((-g - root) / 2.0)
    return CardanoTrace(a0, a1, a2, a3, h, g, discriminant, u3, v3, (u3 + v3).real)


def cardano_root(fill: float, beta_sq: float) -> float:
    """Positive root by Cardano with real cube roots and the -a1 shift.

    A negative discriminant takes the trigonometric branch. The closed form
    loses digits to cancellation near ps = 1 for small beta^2, so the result
    gets one Newton step on the cubic.
    """
    trace = cardano_trace(fill, beta_sq)
    h, g = trace.H, trace.G
    disc = g * g + 4.0 * h**3
    if disc >= 0.0:
        s = math.sqrt(disc)
        z = float(np.cbrt((-g + s) / 2.0) + np.cbrt((-g - s) / 2.0))
    else:
        r = math.sqrt(-h)
        cos_arg = float(np.clip((-g / 2.0) / r**3, -1.0, 1.0))
        z = 2.0 * r * math.cos(math.acos(cos_arg) / 3.0)
    root = z - trace.a1
    c2 = 3.0 * trace.a1
    slope = 3.0 * root * root + 2.0 * c2 * root
    if slope > 0.0:
        root -= (root**3 + c2 * root * root + trace.a3) / slope
    return root
