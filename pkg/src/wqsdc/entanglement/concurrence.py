"""One-to-rest squared concurrences and the concurrence fill of three-qubit pure states."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from wqsdc.entanglement.exceptions import BrokenTripleError, QubitCountError
from wqsdc.kernel import StateVector, partial_trace
from wqsdc.protocol.models import WStateParams

LOGGER = logging.getLogger(__name__)

# Entries this far below zero are rounding noise and clamp to 0.
ENTRY_TOLERANCE = 1e-12
RADICAND_TOLERANCE = 1e-10

W_LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class ConcurrenceTriple:
    """Squared concurrences C^2_{A(BC)}, C^2_{B(AC)}, C^2_{C(AB)}."""

    c2_a_bc: float
    c2_b_ac: float
    c2_c_ab: float

    def as_tuple(self) -> tuple[float, float, float]:
        return self.c2_a_bc, self.c2_b_ac, self.c2_c_ab

    @property
    def q(self) -> float:
        return 0.5 * sum(self.as_tuple())


@dataclass(frozen=True)
class FillReport:
    q: float
    fill: float
    triple: ConcurrenceTriple

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "fill": self.fill,
            "c2_a_bc": self.triple.c2_a_bc,
            "c2_b_ac": self.triple.c2_b_ac,
            "c2_c_ab": self.triple.c2_c_ab,
        }


def _clamp_entry(name: str, value: float) -> float:
    if value < -ENTRY_TOLERANCE:
        raise BrokenTripleError(name, value)
    return max(value, 0.0)


def concurrence_triple(state: StateVector) -> ConcurrenceTriple:
    """4 det(rho_i) of each one-qubit reduced state, in label order."""
    if state.num_qubits != 3:
        raise QubitCountError(state.num_qubits)
    if not state.normalized:
        state = state.renormalized()
    values = []
    for label in state.labels:
        rho = partial_trace(state, [label]).entries
        values.append(_clamp_entry(f"C^2[{label}]", 4.0 * float(np.linalg.det(rho).real)))
    return ConcurrenceTriple(*values)


def fill_from_triple(triple: ConcurrenceTriple) -> FillReport:
    """(16/3 Q (Q - C_A^2)(Q - C_B^2)(Q - C_C^2))^(1/4)."""
    q = triple.q
    radicand = 16.0 / 3.0 * q * np.prod([q - c for c in triple.as_tuple()])
    return FillReport(q=q, fill=_fourth_root(float(radicand)), triple=triple)


def _fourth_root(radicand: float) -> float:
    if radicand < -RADICAND_TOLERANCE:
        raise BrokenTripleError("fill radicand", radicand)
    if radicand < 0.0:
        LOGGER.debug("Clamping fill radicand %.3e to zero", radicand)
        radicand = 0.0
    return radicand**0.25


def w_class_triple(alpha_sq: float, beta_sq: float, gamma_sq: float) -> ConcurrenceTriple:
    """Qubit A carries gamma, B carries beta, C carries alpha."""
    return ConcurrenceTriple(
        4.0 * gamma_sq * (1.0 - gamma_sq),
        4.0 * beta_sq * (1.0 - beta_sq),
        4.0 * alpha_sq * (1.0 - alpha_sq),
    )


def fill_closed_form(alpha_sq: float, beta_sq: float, gamma_sq: float) -> float:
    """Concurrence fill of a W-class state straight from its squared magnitudes."""
    a, b, c = alpha_sq, beta_sq, gamma_sq
    s = 1.0 - a * a - b * b - c * c
    radicand = (
        s
        * (1.0 - b * b - a * a + c * c - 2.0 * c)
        * (1.0 - a * a - c * c + b * b - 2.0 * b)
        * (1.0 - c * c - b * b + a * a - 2.0 * a)
    )
    # 4 / 3^(1/4) outside the root is 256/3 inside it.
    return _fourth_root(256.0 / 3.0 * radicand)


def w_class_state(wparams: WStateParams) -> StateVector:
    return wparams.as_state(W_LABELS)


def concurrence_fill(source: StateVector | WStateParams) -> FillReport:
    """Fill of a three-qubit pure state; W-class parameters take the closed form."""
    if isinstance(source, WStateParams):
        triple = w_class_triple(*source.squared)
        return FillReport(q=triple.q, fill=fill_closed_form(*source.squared), triple=triple)
    return fill_from_triple(concurrence_triple(source))
