"""Two-parameter symmetric cloning transformation.

    |0>|0>|Q> -> (|00> + p(|01> + |10>)) |Q0>
    |1>|0>|Q> -> (|11> + q(|01> + |10>)) |Q1>

The machine is one qubit with |Q0> proportional to |0> and |Q1> to |1>.
``PHYSICAL_ISOMETRY`` scales the machine kets by 1/sqrt(1 + 2|p|^2) and
1/sqrt(1 + 2|q|^2) so the map preserves norm; ``PAPER_LITERAL`` keeps them
unit-length and the image is not normalized.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from wqsdc.cloning.exceptions import CloningError, InputRangeError
from wqsdc.kernel import StateVector

LOGGER = logging.getLogger(__name__)

CLONE_LABELS = ("a", "b", "c")

_INPUT_NORM_TOL = 1e-9


class Convention(str, Enum):
    PAPER_LITERAL = "paper_literal"
    PHYSICAL_ISOMETRY = "physical_isometry"

    @classmethod
    def parse(cls, value: str | Convention) -> Convention:
        if isinstance(value, Convention):
            return value
        normalized = value.strip().lower().replace("-", "_")
        aliases = {"physical": cls.PHYSICAL_ISOMETRY, "literal": cls.PAPER_LITERAL}
        if normalized in aliases:
            return aliases[normalized]
        return cls(normalized)


@dataclass(frozen=True)
class CloneMachineSpec:
    """Cloner parameters; any finite complex p, q are allowed."""

    p: complex = 0j
    q: complex = 0j
    convention: Convention = Convention.PAPER_LITERAL

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise CloningError(f"Cloner parameter {name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "convention", Convention.parse(self.convention))

    @property
    def p_sq(self) -> float:
        return abs(self.p) ** 2

    @property
    def q_sq(self) -> float:
        return abs(self.q) ** 2

    def unitarity_norms(self) -> tuple[float, float]:
        """<Q0|Q0>, <Q1|Q1> demanded by norm preservation."""
        return 1.0 / (1.0 + 2.0 * self.p_sq), 1.0 / (1.0 + 2.0 * self.q_sq)

    def machine_scales(self) -> tuple[float, float]:
        """Amplitude scale of |Q0>, |Q1> under this spec's convention."""
        if self.convention is Convention.PHYSICAL_ISOMETRY:
            n0, n1 = self.unitarity_norms()
            return math.sqrt(n0), math.sqrt(n1)
        return 1.0, 1.0

    def with_convention(self, convention: Convention | str) -> CloneMachineSpec:
        return CloneMachineSpec(self.p, self.q, Convention.parse(convention))


@dataclass(frozen=True)
class InputQubit:
    """Input state x|0> + y|1>."""

    x: complex
    y: complex

    def __post_init__(self) -> None:
        x, y = complex(self.x), complex(self.y)
        total = abs(x) ** 2 + abs(y) ** 2
        if abs(total - 1.0) > _INPUT_NORM_TOL:
            raise InputRangeError("|x|^2+|y|^2", total, "1 +- 1e-9")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def m(self) -> float:
        return abs(self.x) ** 2

    @classmethod
    def from_m(cls, m: float) -> InputQubit:
        """Real-amplitude input with |x|^2 = m."""
        if not 0.0 <= m <= 1.0:
            raise InputRangeError("m", m, "[0, 1]")
        return cls(math.sqrt(m), math.sqrt(1.0 - m))

    def as_state(self, label: str = "in") -> StateVector:
        return StateVector((label,), [self.x, self.y])


@dataclass(frozen=True, eq=False)
class CloneMap:
    """Images of |0>_a|0>_b|Q>_c and |1>_a|0>_b|Q>_c as columns of ``images``."""

    spec: CloneMachineSpec
    images: np.ndarray
    labels: tuple[str, ...] = CLONE_LABELS

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        return self.images @ np.asarray(amplitudes, dtype=np.complex128)

    def squared_norms(self) -> np.ndarray:
        return np.sum(np.abs(self.images) ** 2, axis=0)


def build_clone_map(spec: CloneMachineSpec) -> CloneMap:
    """Linear map on input (x) blank (x) machine, restricted to blank=|0>, machine=|Q>."""
    s0, s1 = spec.machine_scales()
    images = np.zeros((8, 2), dtype=np.complex128)
    # index = 4a + 2b + c
    images[0b000, 0] = s0
    images[0b010, 0] = spec.p * s0
    images[0b100, 0] = spec.p * s0
    images[0b111, 1] = s1
    images[0b011, 1] = spec.q * s1
    images[0b101, 1] = spec.q * s1
    return CloneMap(spec, images)


@dataclass(eq=False)
class CloneOutput:
    """Cloner output over (original a, copy b, machine c)."""

    state: StateVector
    spec: CloneMachineSpec
    input: InputQubit | None = None

    @property
    def normalized(self) -> bool:
        return self.state.normalized

    @property
    def squared_norm(self) -> float:
        return self.state.squared_norm


def clone_state(
    source: StateVector,
    spec: CloneMachineSpec,
    labels: tuple[str, str, str] = CLONE_LABELS,
) -> StateVector:
    """Run an arbitrary single-qubit ``source`` through the cloner."""
    if source.num_qubits != 1:
        raise CloningError(f"Cloner takes one qubit, got {source.num_qubits}")
    mapping = build_clone_map(spec)
    amps = mapping.apply(source.amplitudes)
    physical = spec.convention is Convention.PHYSICAL_ISOMETRY
    if not physical:
        LOGGER.debug("Paper-literal clone image has squared norm %.12g", np.vdot(amps, amps).real)
    return StateVector(labels, amps, normalized=physical)


def clone(input: InputQubit, spec: CloneMachineSpec) -> CloneOutput:
    """Apply the cloner to ``x|0> + y|1>``."""
    state = clone_state(input.as_state(), spec)
    return CloneOutput(state=state, spec=spec, input=input)
