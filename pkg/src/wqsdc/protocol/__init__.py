"""Controlled direct-communication protocol over a shared W-class state."""

from wqsdc.protocol.attacks import AttackKind, AttackReport, attack_scenario, blind_guess_fidelity
from wqsdc.protocol.exceptions import InvalidParametersError, ProtocolError, UnknownBitsError
from wqsdc.protocol.metrics import RunStats
from wqsdc.protocol.models import (
    BELL_TO_BITS,
    BITS_TO_BELL,
    COMPOSITE_LABELS,
    AbortStage,
    Aborted,
    Channel,
    ClassicalMessage,
    Party,
    PauliCorrection,
    ProtocolTranscript,
    RunConfig,
    SecretState,
    Succeeded,
    TranscriptEvent,
    WStateParams,
)
from wqsdc.protocol.probability import (
    Branch,
    MonteCarloEstimate,
    build_tree,
    enumerate_branches,
    literal_accept_bound,
    monte_carlo_estimate,
    success_probability,
)
from wqsdc.protocol.runner import ProtocolRunner, run_protocol
from wqsdc.protocol.steps import (
    TABLE3_CORRECTIONS,
    TABLE4_CORRECTIONS,
    AliceOutcome,
    BobOutcome,
    CharlieOutcome,
    alice_bell_measurement,
    bob_measurement,
    charlie_clone_and_bell,
    charlie_correction,
    correction_for,
    prepare_composite,
)

__all__ = [
    # Attacks
    "AttackKind",
    "AttackReport",
    "attack_scenario",
    "blind_guess_fidelity",
    # Exceptions
    "InvalidParametersError",
    "ProtocolError",
    "UnknownBitsError",
    # Metrics
    "RunStats",
    # Models
    "BELL_TO_BITS",
    "BITS_TO_BELL",
    "COMPOSITE_LABELS",
    "AbortStage",
    "Aborted",
    "Channel",
    "ClassicalMessage",
    "Party",
    "PauliCorrection",
    "ProtocolTranscript",
    "RunConfig",
    "SecretState",
    "Succeeded",
    "TranscriptEvent",
    "WStateParams",
    # Probability
    "Branch",
    "MonteCarloEstimate",
    "build_tree",
    "enumerate_branches",
    "literal_accept_bound",
    "monte_carlo_estimate",
    "success_probability",
    # Runner
    "ProtocolRunner",
    "run_protocol",
    # Steps
    "TABLE3_CORRECTIONS",
    "TABLE4_CORRECTIONS",
    "AliceOutcome",
    "BobOutcome",
    "CharlieOutcome",
    "alice_bell_measurement",
    "bob_measurement",
    "charlie_clone_and_bell",
    "charlie_correction",
    "correction_for",
    "prepare_composite",
]
