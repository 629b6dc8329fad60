"""The four protocol steps as pure functions over the kernel.

Each measuring step takes ``mode``: ``enumerate`` returns every outcome,
``sample`` draws one with the caller's generator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from wqsdc.cloning import CloneMachineSpec, Convention, clone_state
from wqsdc.kernel import (
    StateVector,
    apply_on,
    bell_basis,
    computational_basis,
    measure,
    tensor,
)
from wqsdc.protocol.exceptions import ProtocolError
from wqsdc.protocol.models import (
    BELL_TO_BITS,
    COMPOSITE_LABELS,
    ClassicalMessage,
    PauliCorrection,
    SecretState,
    WStateParams,
    check_bits,
)

LOGGER = logging.getLogger(__name__)

Mode = Literal["enumerate", "sample"]

CHARLIE_LABELS = ("a", "b", "c")

SUCCESS_OUTCOME = "psi+"

# Bits from Bob -> correction Charlie applies to the machine qubit.
TABLE3_CORRECTIONS: dict[str, PauliCorrection] = {
    "00": PauliCorrection.X,
    "11": PauliCorrection.ZX,
    "01": PauliCorrection.I,
    "10": PauliCorrection.Z,
}

# Column four of the cloner table, kept only for comparison.
TABLE4_CORRECTIONS: dict[str, PauliCorrection] = {
    "00": PauliCorrection.Z,
    "11": PauliCorrection.ZX,
    "01": PauliCorrection.I,
    "10": PauliCorrection.X,
}

CORRECTION_TABLES = {"table3": TABLE3_CORRECTIONS, "table4": TABLE4_CORRECTIONS}


@dataclass(eq=False)
class AliceOutcome:
    """Alice's Bell outcome and the (B, C) state it leaves behind."""

    outcome: str
    bits: str
    probability: float
    bc_state: StateVector | None
    branch: np.ndarray


@dataclass(eq=False)
class BobOutcome:
    bit: int
    probability: float
    c_state: StateVector | None

    @property
    def aborts(self) -> bool:
        return self.bit == 1


@dataclass(eq=False)
class CharlieOutcome:
    """Bell outcome on the clone modes and the machine qubit left behind.

    ``raw_weight`` is the squared norm of the projected branch; under the
    paper-literal convention it can exceed 1. ``probability`` is the raw weight
    divided by the sum over all four outcomes, which is what the sampler draws.
    """

    outcome: str
    probability: float
    raw_weight: float
    machine_state: StateVector | None

    @property
    def accepted(self) -> bool:
        return self.outcome == SUCCESS_OUTCOME


def prepare_composite(secret: SecretState, wparams: WStateParams) -> StateVector:
    """|phi>_A1 (x) |W>_{A2 B C}."""
    return tensor([secret.as_state("A1"), wparams.as_state(COMPOSITE_LABELS[1:])])


def _require_rng(mode: Mode, rng: np.random.Generator | None) -> None:
    if mode == "sample" and rng is None:
        raise ProtocolError("Sampling a protocol step needs a seeded generator")


def alice_bell_measurement(
    composite: StateVector,
    mode: Mode = "enumerate",
    rng: np.random.Generator | None = None,
) -> list[AliceOutcome] | AliceOutcome:
    """Bell measurement on (A1, A2); bits follow the announcement codebook."""
    _require_rng(mode, rng)
    records = measure(composite, bell_basis(), ["A1", "A2"], "enumerate")
    outcomes = [
        AliceOutcome(
            outcome=record.outcome,
            bits=BELL_TO_BITS[record.outcome],
            probability=record.probability,
            bc_state=record.remainder,
            branch=record.branch,
        )
        for record in records
    ]
    if mode == "enumerate":
        return outcomes
    weights = np.array([o.probability for o in outcomes])
    return outcomes[int(rng.choice(len(outcomes), p=weights / weights.sum()))]


def bob_measurement(
    bc_state: StateVector,
    mode: Mode = "enumerate",
    rng: np.random.Generator | None = None,
) -> list[BobOutcome] | BobOutcome:
    """Computational-basis measurement of B; outcome 1 aborts the run."""
    _require_rng(mode, rng)
    records = measure(bc_state, computational_basis(1), ["B"], "enumerate")
    outcomes = [
        BobOutcome(bit=int(record.outcome), probability=record.probability, c_state=record.remainder)
        for record in records
    ]
    if mode == "enumerate":
        return outcomes
    weights = np.array([o.probability for o in outcomes])
    return outcomes[int(rng.choice(len(outcomes), p=weights / weights.sum()))]


def charlie_clone_and_bell(
    c_state: StateVector,
    wparams: WStateParams,
    convention: Convention | str = Convention.PAPER_LITERAL,
    mode: Mode = "enumerate",
    rng: np.random.Generator | None = None,
) -> list[CharlieOutcome] | CharlieOutcome:
    """Clone C with p=alpha, q=gamma, then Bell-measure the two clone modes."""
    _require_rng(mode, rng)
    convention = Convention.parse(convention)
    spec = CloneMachineSpec(p=wparams.alpha, q=wparams.gamma, convention=convention)
    cloned = clone_state(c_state, spec, CHARLIE_LABELS)
    LOGGER.debug("Post-clone state (%s):\n%s", convention.value, cloned.dump())
    records = measure(cloned, bell_basis(), list(CHARLIE_LABELS[:2]), "enumerate")

    total = sum(record.probability for record in records)
    if abs(total - 1.0) > 1e-12:
        LOGGER.debug("Clone branch weights sum to %.12g; renormalizing", total)
    outcomes = [
        CharlieOutcome(
            outcome=record.outcome,
            probability=record.probability / total if total > 0.0 else 0.0,
            raw_weight=record.probability,
            machine_state=record.remainder,
        )
        for record in records
    ]
    if mode == "enumerate":
        return outcomes
    weights = np.array([o.probability for o in outcomes])
    return outcomes[int(rng.choice(len(outcomes), p=weights / weights.sum()))]


def correction_for(bits: str | ClassicalMessage, table: str = "table3") -> PauliCorrection:
    if isinstance(bits, ClassicalMessage):
        bits = bits.bits
    check_bits(bits)
    try:
        return CORRECTION_TABLES[table][bits]
    except KeyError:
        raise ProtocolError(f"Unknown correction table '{table}'") from None


def charlie_correction(
    machine_state: StateVector,
    bits: str | ClassicalMessage,
    table: str = "table3",
) -> StateVector:
    """Apply the Pauli correction selected by Bob's bits."""
    op = correction_for(bits, table)
    return apply_on(machine_state, op.matrix, [machine_state.labels[0]])
