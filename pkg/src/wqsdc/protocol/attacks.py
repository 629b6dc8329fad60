"""Inside and outside attack scenarios.

Each shot draws from its own generator seeded with ``seed ^ shot`` and walks
the exact branch tree, re-preparing on aborts like the honest runner does.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from wqsdc.cloning import CloneMachineSpec, clone_state
from wqsdc.kernel import (
    SIGMA_Z,
    StateVector,
    apply_on,
    bell_basis,
    fidelity,
    make_rng,
    measure,
)
from wqsdc.protocol.exceptions import ProtocolError
from wqsdc.protocol.metrics import RunStats
from wqsdc.protocol.models import (
    AbortStage,
    Channel,
    Party,
    RunConfig,
    SecretState,
)
from wqsdc.protocol.probability import AliceNode, build_tree
from wqsdc.protocol.runner import run_protocol
from wqsdc.protocol.steps import (
    TABLE3_CORRECTIONS,
    bob_measurement,
    charlie_correction,
)

LOGGER = logging.getLogger(__name__)

_GUESSES = tuple(TABLE3_CORRECTIONS)


class AttackKind(str, Enum):
    DISHONEST_RECEIVER = "dishonest_receiver"
    DISHONEST_CONTROLLER = "dishonest_controller"
    OUTSIDE_EVE = "outside_eve"

    @classmethod
    def parse(cls, value: str | AttackKind) -> AttackKind:
        if isinstance(value, AttackKind):
            return value
        aliases = {
            "receiver": cls.DISHONEST_RECEIVER,
            "controller": cls.DISHONEST_CONTROLLER,
            "eve": cls.OUTSIDE_EVE,
        }
        key = value.strip().lower().replace("-", "_")
        return aliases.get(key) or cls(key)


@dataclass
class AttackReport:
    """Outcome of an attack simulation."""

    kind: AttackKind
    shots: int
    seed: int
    mean_fidelity: float
    analytic_mean: float | None
    baselines: dict[str, float] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)
    stats: RunStats = field(default_factory=RunStats)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "shots": self.shots,
            "seed": self.seed,
            "mean_fidelity": self.mean_fidelity,
            "analytic_mean": self.analytic_mean,
            "baselines": dict(self.baselines),
            "details": dict(self.details),
            "stats": self.stats.to_dict(),
        }


def blind_guess_fidelity(secret: SecretState) -> float:
    """Mean fidelity of the secret after each of the four candidate corrections."""
    state = secret.as_state("c")
    values = [fidelity(state, charlie_correction(state, bits)) for bits in _GUESSES]
    return float(np.mean(values))


def _walk(
    rng: np.random.Generator,
    alice_p: np.ndarray,
    pass_p: np.ndarray,
    max_retries: int,
    stats: RunStats,
) -> int | None:
    """Sample attempts until Bob passes and the decode accepts; return the node index."""
    for _ in range(max_retries + 1):
        index = int(rng.choice(len(alice_p), p=alice_p))
        if rng.random() >= pass_p[index, 0]:
            stats.record_attempt(AbortStage.BOB_ONE)
            continue
        if rng.random() >= pass_p[index, 1]:
            stats.record_attempt(AbortStage.CHARLIE_NOT_PSI_PLUS)
            continue
        stats.record_attempt()
        return index
    return None


def _alice_weights(nodes: list[AliceNode]) -> np.ndarray:
    weights = np.array([node.alice.probability for node in nodes])
    return weights / weights.sum()


def _dishonest_receiver(config: RunConfig, shots: int, seed: int) -> AttackReport:
    """Charlie measures Bob's qubit himself and guesses the correction."""
    nodes = build_tree(config.secret, config.wparams, config.convention)
    secret = config.secret.as_state("c")

    # fid[i, k]: machine state of Alice outcome i after guess k
    fid = np.zeros((len(nodes), len(_GUESSES)))
    pass_p = np.zeros((len(nodes), 2))
    success_w = np.zeros(len(nodes))
    for i, node in enumerate(nodes):
        accept = node.accept
        pass_p[i, 0] = node.bob_pass
        if accept is None or accept.machine_state is None:
            continue
        pass_p[i, 1] = accept.probability
        success_w[i] = node.alice.probability * node.bob_pass * accept.probability
        for k, bits in enumerate(_GUESSES):
            fid[i, k] = fidelity(secret, charlie_correction(accept.machine_state, bits))

    stats = RunStats()
    alice_p = _alice_weights(nodes)
    for shot in range(shots):
        rng = make_rng(seed ^ shot)
        index = _walk(rng, alice_p, pass_p, config.max_retries, stats)
        if index is None:
            stats.record_shot(None)
            continue
        stats.record_shot(float(fid[index, int(rng.integers(len(_GUESSES)))]))

    analytic = None
    if success_w.sum() > 0.0:
        analytic = float(success_w @ fid.mean(axis=1) / success_w.sum())
    return AttackReport(
        kind=AttackKind.DISHONEST_RECEIVER,
        shots=shots,
        seed=seed,
        mean_fidelity=stats.mean_fidelity,
        analytic_mean=analytic,
        baselines={"blind_guess": blind_guess_fidelity(config.secret), "honest": 1.0},
        details={"strategy": "uniform guess over the four corrections"},
        stats=stats,
    )


def _controller_decode(c_state: StateVector) -> list[tuple[float, StateVector]]:
    """Bob's decode without the shared-state parameters: a p=q=0 cloner.

    Accepts both phi outcomes and undoes the phi- sign flip with sigma_z.
    """
    cloned = clone_state(c_state, CloneMachineSpec(), ("a", "b", "c"))
    decoded = []
    for record in measure(cloned, bell_basis(), ["a", "b"], "enumerate"):
        if record.outcome not in ("phi+", "phi-") or record.probability <= 0.0:
            continue
        state = record.remainder
        if record.outcome == "phi-":
            state = apply_on(state, SIGMA_Z, ["c"])
        decoded.append((record.probability, state))
    return decoded


def _dishonest_controller(config: RunConfig, shots: int, seed: int) -> AttackReport:
    """Bob keeps Charlie's qubit and decodes without knowing (alpha, gamma)."""
    nodes = build_tree(config.secret, config.wparams, config.convention)
    secret = config.secret.as_state("c")

    pass_p = np.zeros((len(nodes), 2))
    # per node: (decode probabilities, withheld fidelities, with-bits fidelities)
    outcomes: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    for i, node in enumerate(nodes):
        probs, plain, corrected = [], [], []
        if node.alice.bc_state is not None:
            passed = next(o for o in bob_measurement(node.alice.bc_state) if o.bit == 0)
            pass_p[i, 0] = passed.probability
            if passed.c_state is not None:
                for probability, state in _controller_decode(passed.c_state):
                    probs.append(probability)
                    plain.append(fidelity(secret, state))
                    corrected.append(fidelity(secret, charlie_correction(state, node.alice.bits)))
        pass_p[i, 1] = sum(probs)
        outcomes.append((np.array(probs), np.array(plain), np.array(corrected)))

    stats = RunStats()
    with_bits = RunStats()
    alice_p = _alice_weights(nodes)
    for shot in range(shots):
        rng = make_rng(seed ^ shot)
        index = _walk(rng, alice_p, pass_p, config.max_retries, stats)
        if index is None:
            stats.record_shot(None)
            continue
        probs, plain, corrected = outcomes[index]
        pick = int(rng.choice(len(probs), p=probs / probs.sum()))
        stats.record_shot(float(plain[pick]))
        with_bits.record_shot(float(corrected[pick]))

    total = plain_sum = bits_sum = 0.0
    for i, (probs, plain, corrected) in enumerate(outcomes):
        weights = alice_p[i] * pass_p[i, 0] * probs
        total += float(weights.sum())
        plain_sum += float(weights @ plain) if probs.size else 0.0
        bits_sum += float(weights @ corrected) if probs.size else 0.0
    analytic = plain_sum / total if total > 0.0 else None
    analytic_bits = bits_sum / total if total > 0.0 else 0.0
    return AttackReport(
        kind=AttackKind.DISHONEST_CONTROLLER,
        shots=shots,
        seed=seed,
        mean_fidelity=stats.mean_fidelity,
        analytic_mean=analytic,
        baselines={
            "with_correct_bits": with_bits.mean_fidelity,
            "with_correct_bits_analytic": analytic_bits,
            "honest": 1.0,
        },
        details={"cloner": "p=q=0", "correction": "identity (bits withheld)"},
        stats=stats,
    )


def _outside_eve(config: RunConfig, shots: int, seed: int) -> AttackReport:
    """Structural check: no message-carrying qubit travels between Bob and Charlie."""
    stats = RunStats()
    quantum_events = 0
    bob_charlie = 0
    pair = {Party.BOB, Party.CHARLIE}
    for shot in range(shots):
        shot_config = RunConfig(
            config.secret, config.wparams, config.convention, seed ^ shot, config.max_retries
        )
        transcript = run_protocol(shot_config, stats)
        for event in transcript.events:
            if event.channel is not Channel.QUANTUM:
                continue
            quantum_events += 1
            if {event.party, event.target} == pair:
                bob_charlie += 1
    return AttackReport(
        kind=AttackKind.OUTSIDE_EVE,
        shots=shots,
        seed=seed,
        mean_fidelity=stats.mean_fidelity,
        analytic_mean=None,
        baselines={"honest": 1.0},
        details={
            "quantum_events": quantum_events,
            "bob_charlie_quantum_events": bob_charlie,
            "interceptable_secret_qubit": bob_charlie > 0,
        },
        stats=stats,
    )


_SCENARIOS = {
    AttackKind.DISHONEST_RECEIVER: _dishonest_receiver,
    AttackKind.DISHONEST_CONTROLLER: _dishonest_controller,
    AttackKind.OUTSIDE_EVE: _outside_eve,
}


def attack_scenario(
    kind: AttackKind | str,
    config: RunConfig,
    shots: int = 10_000,
    seed: int | None = None,
) -> AttackReport:
    """Simulate one attack; ``seed`` defaults to the run config's seed."""
    if shots < 1:
        raise ProtocolError(f"shots must be >= 1, got {shots}")
    config.validate()
    kind = AttackKind.parse(kind)
    seed = config.seed if seed is None else seed
    LOGGER.info("Attack %s: %d shots, seed %d", kind.value, shots, seed)
    report = _SCENARIOS[kind](config, shots, seed)
    LOGGER.info("Attack %s finished: %s", kind.value, report.stats.summary())
    return report
