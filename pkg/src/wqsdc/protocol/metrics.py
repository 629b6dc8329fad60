"""Run statistics for observability."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from wqsdc.protocol.models import AbortStage

if TYPE_CHECKING:
    from wqsdc.protocol.models import ProtocolTranscript


@dataclass
class RunStats:
    """Aggregate attempt and fidelity statistics across runs or shots."""

    runs: int = 0
    attempts: int = 0
    successes: int = 0
    exhausted: int = 0
    aborts: dict[str, int] = field(
        default_factory=lambda: {stage.value: 0 for stage in AbortStage}
    )
    fidelities: list[float] = field(default_factory=list)

    def record_attempt(self, abort_stage: AbortStage | None = None) -> None:
        """Count one attempt; pass the stage when it aborted."""
        self.attempts += 1
        if abort_stage is not None:
            self.aborts[abort_stage.value] = self.aborts.get(abort_stage.value, 0) + 1

    def record_success(self, fidelity: float) -> None:
        self.successes += 1
        self.fidelities.append(fidelity)

    def record_shot(self, fidelity: float | None) -> None:
        """Close one run or shot; ``None`` means the retry budget ran out."""
        self.runs += 1
        if fidelity is None:
            self.exhausted += 1
        else:
            self.record_success(fidelity)

    def record_run(self, transcript: ProtocolTranscript) -> None:
        self.record_shot(transcript.fidelity)

    @property
    def mean_fidelity(self) -> float:
        if not self.fidelities:
            return 0.0
        return sum(self.fidelities) / len(self.fidelities)

    @property
    def min_fidelity(self) -> float:
        if not self.fidelities:
            return 0.0
        return min(self.fidelities)

    @property
    def success_rate(self) -> float:
        """Successful attempts over all attempts."""
        if self.attempts == 0:
            return 0.0
        return self.successes / self.attempts

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "attempts": self.attempts,
            "successes": self.successes,
            "exhausted": self.exhausted,
            "aborts": dict(self.aborts),
            "mean_fidelity": self.mean_fidelity,
            "min_fidelity": self.min_fidelity,
        }

    def summary(self) -> str:
        return (
            f"Runs: {self.runs} | Attempts: {self.attempts} "
            f"(ok={self.successes} "
            f"bob={self.aborts.get(AbortStage.BOB_ONE.value, 0)} "
            f"charlie={self.aborts.get(AbortStage.CHARLIE_NOT_PSI_PLUS.value, 0)}) | "
            f"Exhausted: {self.exhausted} | "
            f"Mean fidelity: {self.mean_fidelity:.6f}"
        )
