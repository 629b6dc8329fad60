"""Data models for the controlled direct-communication protocol."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from wqsdc.cloning import Convention
from wqsdc.kernel import IDENTITY, SIGMA_X, SIGMA_Z, StateVector
from wqsdc.protocol.exceptions import (
    InvalidParametersError,
    ProtocolError,
    UnknownBitsError,
)

_PARAM_TOL = 1e-9

COMPOSITE_LABELS = ("A1", "A2", "B", "C")

# Alice's Bell outcome -> the two classical bits she announces.
BELL_TO_BITS: dict[str, str] = {
    "phi+": "00",
    "phi-": "11",
    "psi+": "01",
    "psi-": "10",
}
BITS_TO_BELL: dict[str, str] = {bits: bell for bell, bits in BELL_TO_BITS.items()}


def complex_to_list(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def complex_from_list(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        re, im = (list(value) + [0.0])[:2]
        return complex(float(re), float(im))
    return complex(value)


class Party(str, Enum):
    ALICE = "alice"
    BOB = "bob"
    CHARLIE = "charlie"


class Channel(str, Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"
    LOCAL = "local"


class AbortStage(str, Enum):
    BOB_ONE = "bob_one"
    CHARLIE_NOT_PSI_PLUS = "charlie_not_psi_plus"


class PauliCorrection(str, Enum):
    """Single-qubit correction; ZX applies sigma_x first, then sigma_z."""

    I = "I"  # noqa: E741
    X = "X"
    Z = "Z"
    ZX = "ZX"

    @property
    def matrix(self) -> np.ndarray:
        if self is PauliCorrection.I:
            return IDENTITY
        if self is PauliCorrection.X:
            return SIGMA_X
        if self is PauliCorrection.Z:
            return SIGMA_Z
        return SIGMA_Z @ SIGMA_X


@dataclass(frozen=True)
class SecretState:
    """Alice's secret a|0> + b|1>."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        total = abs(a) ** 2 + abs(b) ** 2
        if not math.isfinite(total) or abs(total - 1.0) > _PARAM_TOL:
            raise InvalidParametersError("Secret", total)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def as_state(self, label: str = "A1") -> StateVector:
        return StateVector((label,), [self.a, self.b])

    def to_dict(self) -> dict:
        return {"a": complex_to_list(self.a), "b": complex_to_list(self.b)}

    @classmethod
    def from_dict(cls, data: dict) -> SecretState:
        return cls(complex_from_list(data["a"]), complex_from_list(data["b"]))


@dataclass(frozen=True)
class WStateParams:
    """Shared state alpha|001> + beta|010> + gamma|100>."""

    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self) -> None:
        values = [complex(v) for v in (self.alpha, self.beta, self.gamma)]
        total = sum(abs(v) ** 2 for v in values)
        if not math.isfinite(total) or abs(total - 1.0) > _PARAM_TOL:
            raise InvalidParametersError("Shared state", total)
        for name, value in zip(("alpha", "beta", "gamma"), values):
            object.__setattr__(self, name, value)

    @classmethod
    def from_squared(cls, alpha_sq: float, beta_sq: float, gamma_sq: float) -> WStateParams:
        """Real non-negative amplitudes from squared magnitudes."""
        return cls(math.sqrt(alpha_sq), math.sqrt(beta_sq), math.sqrt(gamma_sq))

    @property
    def alpha_sq(self) -> float:
        return abs(self.alpha) ** 2

    @property
    def beta_sq(self) -> float:
        return abs(self.beta) ** 2

    @property
    def gamma_sq(self) -> float:
        return abs(self.gamma) ** 2

    @property
    def squared(self) -> tuple[float, float, float]:
        return self.alpha_sq, self.beta_sq, self.gamma_sq

    def as_state(self, labels: tuple[str, str, str] = ("A", "B", "C")) -> StateVector:
        """Amplitudes over (A, B, C): alpha on C=1, beta on B=1, gamma on A=1."""
        amps = np.zeros(8, dtype=np.complex128)
        amps[0b001] = self.alpha
        amps[0b010] = self.beta
        amps[0b100] = self.gamma
        return StateVector(labels, amps)

    def to_dict(self) -> dict:
        return {
            "alpha": complex_to_list(self.alpha),
            "beta": complex_to_list(self.beta),
            "gamma": complex_to_list(self.gamma),
        }

    @classmethod
    def from_dict(cls, data: dict) -> WStateParams:
        return cls(
            complex_from_list(data["alpha"]),
            complex_from_list(data["beta"]),
            complex_from_list(data["gamma"]),
        )


def check_bits(bits: str) -> str:
    if bits not in BITS_TO_BELL:
        raise UnknownBitsError(bits)
    return bits


@dataclass(frozen=True)
class ClassicalMessage:
    """Two classical bits sent from one party to another."""

    sender: Party
    receiver: Party
    bits: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "sender", Party(self.sender))
        object.__setattr__(self, "receiver", Party(self.receiver))
        check_bits(self.bits)


@dataclass
class TranscriptEvent:
    """One protocol step as seen in the transcript."""

    step: str
    party: Party
    channel: Channel
    attempt: int
    basis: str | None = None
    outcome: str | None = None
    bits: str | None = None
    probability: float | None = None
    target: Party | None = None

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "party": self.party.value,
            "basis": self.basis,
            "outcome": self.outcome,
            "bits": self.bits,
            "probability": self.probability,
            "channel": self.channel.value,
            "attempt": self.attempt,
            "target": self.target.value if self.target is not None else None,
        }


@dataclass(frozen=True)
class Succeeded:
    fidelity: float

    status = "succeeded"


@dataclass(frozen=True)
class Aborted:
    stage: AbortStage

    status = "aborted"


Outcome = Succeeded | Aborted


@dataclass
class RunConfig:
    """Configuration for one protocol run."""

    secret: SecretState
    wparams: WStateParams
    convention: Convention = Convention.PAPER_LITERAL
    seed: int = 0
    max_retries: int = 10

    def validate(self) -> None:
        self.convention = Convention.parse(self.convention)
        if self.max_retries < 0:
            raise ProtocolError(f"max_retries must be >= 0, got {self.max_retries}")

    def to_dict(self) -> dict:
        return {
            "secret": self.secret.to_dict(),
            "wparams": self.wparams.to_dict(),
            "convention": Convention.parse(self.convention).value,
            "seed": self.seed,
            "max_retries": self.max_retries,
        }

    @classmethod
    def from_dict(cls, data: dict) -> RunConfig:
        return cls(
            secret=SecretState.from_dict(data["secret"]),
            wparams=WStateParams.from_dict(data["wparams"]),
            convention=Convention.parse(data.get("convention", Convention.PAPER_LITERAL)),
            seed=int(data.get("seed", 0)),
            max_retries=int(data.get("max_retries", 10)),
        )


@dataclass
class ProtocolTranscript:
    """Everything that happened during one run, across all attempts."""

    config: RunConfig
    events: list[TranscriptEvent] = field(default_factory=list)
    outcome: Outcome | None = None
    branch_probability: float = 0.0
    attempts: int = 0

    @property
    def succeeded(self) -> bool:
        return isinstance(self.outcome, Succeeded)

    @property
    def fidelity(self) -> float | None:
        return self.outcome.fidelity if isinstance(self.outcome, Succeeded) else None

    def to_dict(self) -> dict:
        outcome = self.outcome
        return {
            "config": self.config.to_dict(),
            "events": [event.to_dict() for event in self.events],
            "outcome": outcome.status if outcome is not None else None,
            "abort_stage": outcome.stage.value if isinstance(outcome, Aborted) else None,
            "fidelity": self.fidelity,
            "branch_probability": self.branch_probability,
            "attempts": self.attempts,
        }
