"""High-level orchestration for one protocol run with retries."""

from __future__ import annotations

import logging

import numpy as np

from wqsdc.kernel import fidelity, make_rng
from wqsdc.protocol.metrics import RunStats
from wqsdc.protocol.models import (
    AbortStage,
    Aborted,
    Channel,
    ClassicalMessage,
    Party,
    ProtocolTranscript,
    RunConfig,
    Succeeded,
    TranscriptEvent,
)
from wqsdc.protocol.steps import (
    AliceOutcome,
    alice_bell_measurement,
    bob_measurement,
    charlie_clone_and_bell,
    charlie_correction,
    correction_for,
    prepare_composite,
)

LOGGER = logging.getLogger(__name__)


class ProtocolRunner:
    """Drives the prepare / measure / clone / correct sequence.

    A Bob outcome of 1 or a non-psi+ outcome at Charlie aborts the attempt;
    the runner re-prepares with fresh draws from the same generator until an
    attempt succeeds or ``max_retries`` retries are spent.
    """

    def __init__(self, config: RunConfig, stats: RunStats | None = None) -> None:
        config.validate()
        self.config = config
        self.stats = stats if stats is not None else RunStats()

    def run(self, rng: np.random.Generator | None = None) -> ProtocolTranscript:
        config = self.config
        rng = rng if rng is not None else make_rng(config.seed)
        transcript = ProtocolTranscript(config=config)

        LOGGER.info(
            "Starting run (convention=%s, seed=%d, max_retries=%d)",
            config.convention.value,
            config.seed,
            config.max_retries,
        )
        for attempt in range(config.max_retries + 1):
            transcript.attempts = attempt + 1
            outcome, branch_probability = self._attempt(attempt, rng, transcript.events)
            transcript.outcome = outcome
            transcript.branch_probability = branch_probability
            self.stats.record_attempt(outcome.stage if isinstance(outcome, Aborted) else None)
            if isinstance(outcome, Succeeded):
                LOGGER.info(
                    "Attempt %d succeeded: fidelity %.12f (branch p=%.6f)",
                    attempt,
                    outcome.fidelity,
                    branch_probability,
                )
                break
            LOGGER.info("Attempt %d aborted at %s", attempt, outcome.stage.value)
        else:
            LOGGER.info("Retry budget exhausted after %d attempts", transcript.attempts)

        self.stats.record_run(transcript)
        return transcript

    def _attempt(
        self,
        attempt: int,
        rng: np.random.Generator,
        events: list[TranscriptEvent],
    ) -> tuple[Succeeded | Aborted, float]:
        config = self.config

        # Step 1: Alice builds the composite and hands out B and C.
        composite = prepare_composite(config.secret, config.wparams)
        events.append(TranscriptEvent("prepare", Party.ALICE, Channel.LOCAL, attempt))
        for receiver in (Party.BOB, Party.CHARLIE):
            events.append(
                TranscriptEvent("distribute", Party.ALICE, Channel.QUANTUM, attempt, target=receiver)
            )
        if LOGGER.isEnabledFor(logging.DEBUG):
            LOGGER.debug("Composite state:\n%s", composite.dump())

        # Step 2: Alice's Bell measurement, bits to Bob.
        alice: AliceOutcome = alice_bell_measurement(composite, "sample", rng)
        events.append(
            TranscriptEvent(
                "measure",
                Party.ALICE,
                Channel.LOCAL,
                attempt,
                basis="bell",
                outcome=alice.outcome,
                bits=alice.bits,
                probability=alice.probability,
            )
        )
        to_bob = ClassicalMessage(Party.ALICE, Party.BOB, alice.bits)
        events.append(self._message_event(to_bob, attempt))

        # Step 3: Bob measures B.
        bob = bob_measurement(alice.bc_state, "sample", rng)
        events.append(
            TranscriptEvent(
                "measure",
                Party.BOB,
                Channel.LOCAL,
                attempt,
                basis="computational",
                outcome=str(bob.bit),
                probability=bob.probability,
            )
        )
        branch_probability = alice.probability * bob.probability
        if bob.aborts:
            events.append(
                TranscriptEvent(
                    "abort", Party.BOB, Channel.LOCAL, attempt, outcome=AbortStage.BOB_ONE.value
                )
            )
            return Aborted(AbortStage.BOB_ONE), branch_probability
        to_charlie = ClassicalMessage(Party.BOB, Party.CHARLIE, to_bob.bits)
        events.append(self._message_event(to_charlie, attempt))

        # Step 4: Charlie clones, Bell-measures the clone modes and corrects.
        events.append(TranscriptEvent("clone", Party.CHARLIE, Channel.LOCAL, attempt))
        charlie = charlie_clone_and_bell(
            bob.c_state, config.wparams, config.convention, "sample", rng
        )
        events.append(
            TranscriptEvent(
                "measure",
                Party.CHARLIE,
                Channel.LOCAL,
                attempt,
                basis="bell",
                outcome=charlie.outcome,
                probability=charlie.probability,
            )
        )
        branch_probability *= charlie.probability
        if not charlie.accepted:
            events.append(
                TranscriptEvent(
                    "abort",
                    Party.CHARLIE,
                    Channel.LOCAL,
                    attempt,
                    outcome=AbortStage.CHARLIE_NOT_PSI_PLUS.value,
                )
            )
            return Aborted(AbortStage.CHARLIE_NOT_PSI_PLUS), branch_probability

        corrected = charlie_correction(charlie.machine_state, to_charlie)
        events.append(
            TranscriptEvent(
                "correct",
                Party.CHARLIE,
                Channel.LOCAL,
                attempt,
                outcome=correction_for(to_charlie).value,
                bits=to_charlie.bits,
            )
        )
        value = fidelity(config.secret.as_state("c"), corrected)
        return Succeeded(value), branch_probability

    @staticmethod
    def _message_event(message: ClassicalMessage, attempt: int) -> TranscriptEvent:
        return TranscriptEvent(
            "message",
            message.sender,
            Channel.CLASSICAL,
            attempt,
            bits=message.bits,
            target=message.receiver,
        )


def run_protocol(config: RunConfig, stats: RunStats | None = None) -> ProtocolTranscript:
    """Execute one run with retries; exhausted retries yield an Aborted transcript."""
    return ProtocolRunner(config, stats).run()
