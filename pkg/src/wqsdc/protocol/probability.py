"""Exact branch enumeration and success probability."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from wqsdc.cloning import Convention
from wqsdc.kernel import StateVector, fidelity, make_rng
from wqsdc.protocol.exceptions import ProtocolError
from wqsdc.protocol.models import AbortStage, SecretState, WStateParams
from wqsdc.protocol.steps import (
    AliceOutcome,
    CharlieOutcome,
    alice_bell_measurement,
    bob_measurement,
    charlie_clone_and_bell,
    charlie_correction,
    prepare_composite,
)

LOGGER = logging.getLogger(__name__)

Method = Literal["analytic", "enumerate", "monte_carlo"]

DEFAULT_SECRET = SecretState(1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0))


@dataclass(eq=False)
class Branch:
    """One leaf of the protocol tree.

    ``probability`` multiplies Alice's, Bob's and Charlie's outcome weights;
    Charlie's factor is the raw weight.
    """

    alice: str
    bits: str
    bob: int
    charlie: str | None
    probability: float
    abort_stage: AbortStage | None = None
    fidelity: float | None = None
    final_state: StateVector | None = None

    @property
    def succeeded(self) -> bool:
        return self.abort_stage is None


@dataclass(eq=False)
class AliceNode:
    """Per Alice outcome: Bob's pass probability and Charlie's accept branch."""

    alice: AliceOutcome
    bob_pass: float
    charlie: list[CharlieOutcome] = field(default_factory=list)

    @property
    def accept(self) -> CharlieOutcome | None:
        return next((o for o in self.charlie if o.accepted), None)

    @property
    def accept_raw(self) -> float:
        accept = self.accept
        return accept.raw_weight if accept is not None else 0.0


def build_tree(
    secret: SecretState,
    wparams: WStateParams,
    convention: Convention | str = Convention.PAPER_LITERAL,
) -> list[AliceNode]:
    """Expand the protocol by exact branch arithmetic, one node per Alice outcome."""
    convention = Convention.parse(convention)
    composite = prepare_composite(secret, wparams)
    nodes = []
    for alice in alice_bell_measurement(composite, "enumerate"):
        node = AliceNode(alice=alice, bob_pass=0.0)
        if alice.probability > 0.0:
            pass_branch = next(o for o in bob_measurement(alice.bc_state, "enumerate") if o.bit == 0)
            node.bob_pass = pass_branch.probability
            if pass_branch.probability > 0.0:
                node.charlie = charlie_clone_and_bell(
                    pass_branch.c_state, wparams, convention, "enumerate"
                )
        nodes.append(node)
    return nodes


def enumerate_branches(
    secret: SecretState,
    wparams: WStateParams,
    convention: Convention | str = Convention.PAPER_LITERAL,
) -> list[Branch]:
    """Every reachable (Alice, Bob, Charlie) leaf with its joint weight."""
    secret_state = secret.as_state("c")
    leaves: list[Branch] = []
    for node in build_tree(secret, wparams, convention):
        alice = node.alice
        if alice.probability <= 0.0:
            continue
        bob_abort = alice.probability * (1.0 - node.bob_pass)
        if bob_abort > 0.0:
            leaves.append(
                Branch(alice.outcome, alice.bits, 1, None, bob_abort, AbortStage.BOB_ONE)
            )
        for outcome in node.charlie:
            weight = alice.probability * node.bob_pass * outcome.raw_weight
            if weight <= 0.0:
                continue
            if not outcome.accepted:
                leaves.append(
                    Branch(
                        alice.outcome,
                        alice.bits,
                        0,
                        outcome.outcome,
                        weight,
                        AbortStage.CHARLIE_NOT_PSI_PLUS,
                    )
                )
                continue
            corrected = charlie_correction(outcome.machine_state, alice.bits)
            leaves.append(
                Branch(
                    alice.outcome,
                    alice.bits,
                    0,
                    outcome.outcome,
                    weight,
                    fidelity=fidelity(secret_state, corrected),
                    final_state=corrected,
                )
            )
    for leaf in leaves:
        LOGGER.debug(
            "Branch %s/%d/%s: p=%.12g", leaf.alice, leaf.bob, leaf.charlie, leaf.probability
        )
    return leaves


@dataclass
class MonteCarloEstimate:
    """Sampled success probability.

    ``total_weight`` is the summed weight of every leaf; it is 1 under the
    physical convention and can exceed 1 under the paper-literal one.
    """

    mean: float
    stderr: float
    shots: int
    successes: int
    total_weight: float = 1.0


def monte_carlo_estimate(
    wparams: WStateParams,
    convention: Convention | str = Convention.PAPER_LITERAL,
    shots: int = 10_000,
    seed: int = 0,
    secret: SecretState | None = None,
) -> MonteCarloEstimate:
    """Sample leaves of the branch tree ``shots`` times from one seeded generator.

    Leaves are drawn in proportion to their weight. The success fraction is
    scaled by the total leaf weight, so the estimate targets the same value
    as ``enumerate`` in both conventions.
    """
    if shots < 1:
        raise ProtocolError(f"shots must be >= 1, got {shots}")
    convention = Convention.parse(convention)
    leaves = enumerate_branches(secret or DEFAULT_SECRET, wparams, convention)
    weights = np.array([leaf.probability for leaf in leaves])
    succeeded = np.array([leaf.succeeded for leaf in leaves])
    total = float(weights.sum())

    rng = make_rng(seed)
    picks = rng.choice(len(leaves), size=shots, p=weights / total)
    successes = int(np.count_nonzero(succeeded[picks]))

    fraction = successes / shots
    mean = total * fraction
    stderr = total * math.sqrt(fraction * (1.0 - fraction) / shots)
    LOGGER.info(
        "Monte Carlo (%s, %d shots, seed %d): P_s = %.6f +- %.6f (leaf weight %.6f)",
        convention.value,
        shots,
        seed,
        mean,
        stderr,
        total,
    )
    return MonteCarloEstimate(mean, stderr, shots, successes, total)


def success_probability(
    wparams: WStateParams,
    method: Method = "analytic",
    convention: Convention | str = Convention.PAPER_LITERAL,
    secret: SecretState | None = None,
    shots: int = 10_000,
    seed: int = 0,
) -> float:
    """P(Alice any, Bob 0, Charlie psi+) summed over Alice's outcomes."""
    if method == "analytic":
        return 4.0 * wparams.alpha_sq * wparams.gamma_sq
    if method == "enumerate":
        leaves = enumerate_branches(secret or DEFAULT_SECRET, wparams, convention)
        return float(sum(leaf.probability for leaf in leaves if leaf.succeeded))
    if method == "monte_carlo":
        return monte_carlo_estimate(wparams, convention, shots, seed, secret).mean
    raise ProtocolError(f"Unknown success-probability method '{method}'")


def literal_accept_bound(secret: SecretState, wparams: WStateParams) -> float:
    """Largest paper-literal psi+ weight over Alice's outcomes.

    The phi outcomes leave Charlie a state with weight
    2|alpha|^2|gamma|^2 / (|a|^2|alpha|^2 + |b|^2|gamma|^2); the psi outcomes
    swap alpha and gamma in the denominator.
    """
    a_sq, b_sq = abs(secret.a) ** 2, abs(secret.b) ** 2
    alpha_sq, gamma_sq = wparams.alpha_sq, wparams.gamma_sq
    numerator = 2.0 * alpha_sq * gamma_sq
    if numerator == 0.0:
        return 0.0
    return numerator / min(a_sq * alpha_sq + b_sq * gamma_sq, a_sq * gamma_sq + b_sq * alpha_sq)
