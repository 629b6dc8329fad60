"""The W_n family (|100> + sqrt(n) e^{i g}|010> + sqrt(n+1) e^{i d}|001>) / sqrt(2 + 2n)."""

from __future__ import annotations

import cmath
import math
import numbers
from dataclasses import dataclass

import numpy as np

from wqsdc.entanglement.concurrence import W_LABELS
from wqsdc.entanglement.exceptions import InvalidFamilyIndexError
from wqsdc.kernel import StateVector


@dataclass(frozen=True)
class WnParams:
    n: int
    phase_gamma: float = 0.0
    phase_delta: float = 0.0

    def __post_init__(self) -> None:
        _check_index(self.n)


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
        raise InvalidFamilyIndexError(n)


def wn_state(params: WnParams) -> StateVector:
    n = params.n
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b100] = 1.0
    amps[0b010] = math.sqrt(n) * cmath.exp(1j * params.phase_gamma)
    amps[0b001] = math.sqrt(n + 1) * cmath.exp(1j * params.phase_delta)
    return StateVector(W_LABELS, amps / math.sqrt(2.0 + 2.0 * n))


def wn_fill(n: int) -> float:
    """2 (n^2 (n^2 + 3n + 1) / (3 (1 + n)^6))^(1/4)."""
    _check_index(n)
    return 2.0 * (n**2 * (n**2 + 3 * n + 1) / (3.0 * (1 + n) ** 6)) ** 0.25
