"""Kernel operations: tensor products, operators, measurement, partial trace.

All functions are pure; randomness only enters through a caller-supplied
``numpy.random.Generator``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Literal, Sequence, overload

import numpy as np

from wqsdc.kernel.bases import MeasurementBasis
from wqsdc.kernel.exceptions import (
    DimensionMismatchError,
    DuplicateLabelError,
    EmptySelectionError,
    KernelError,
    NonUnitaryError,
    UnknownLabelError,
)
from wqsdc.kernel.state import DensityMatrix, StateVector

LOGGER = logging.getLogger(__name__)

UNITARITY_TOL = 1e-10

MeasureMode = Literal["enumerate", "sample"]


@dataclass(eq=False)
class MeasurementRecord:
    """One measurement outcome.

    ``collapsed_state`` spans all qubits of the measured state; ``remainder``
    is the normalized state of the unmeasured qubits and ``branch`` its
    unnormalized amplitudes (the projected component before
    renormalization). Both states are ``None`` for zero-probability
    outcomes.
    """

    basis: MeasurementBasis
    target_labels: tuple[str, ...]
    outcome_index: int
    probability: float
    collapsed_state: StateVector | None
    remainder: StateVector | None
    branch: np.ndarray

    @property
    def outcome(self) -> str:
        return self.basis.outcome_labels[self.outcome_index]


def tensor(states: Sequence[StateVector]) -> StateVector:
    """Kronecker product in the given label order."""
    if not states:
        raise EmptySelectionError("tensor() needs at least one state")
    labels = tuple(label for state in states for label in state.labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError(labels)
    amps = reduce(np.kron, (state.amplitudes for state in states))
    normalized = all(state.normalized for state in states)
    return StateVector(labels, amps, normalized=normalized)


def _target_indices(state: StateVector, targets: Sequence[str]) -> list[int]:
    if not targets:
        raise EmptySelectionError("No target qubits given")
    if len(set(targets)) != len(targets):
        raise DuplicateLabelError(tuple(targets))
    return [state.index_of(label) for label in targets]


def apply_on(state: StateVector, op: np.ndarray, targets: Sequence[str]) -> StateVector:
    """Apply a unitary ``op`` to the ``targets`` qubits (in that order)."""
    idx = _target_indices(state, targets)
    k = len(idx)
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (2**k, 2**k):
        raise DimensionMismatchError(f"Operator shape {op.shape} does not act on {k} qubits")
    deviation = float(np.max(np.abs(op.conj().T @ op - np.eye(2**k))))
    if deviation > UNITARITY_TOL:
        raise NonUnitaryError(deviation)

    n = state.num_qubits
    psi = state.tensor_view()
    op_tensor = op.reshape([2] * (2 * k))
    # Contract the op's input axes with the target axes; new axes land in front.
    moved = np.tensordot(op_tensor, psi, axes=(list(range(k, 2 * k)), idx))
    rest = [i for i in range(n) if i not in idx]
    order = idx + rest
    inverse = np.argsort(order)
    result = np.transpose(moved, inverse).reshape(-1)
    return StateVector(state.labels, result, normalized=state.normalized)


def _split(state: StateVector, idx: list[int]) -> np.ndarray:
    """Rows: target-subspace index; columns: rest-subspace index."""
    n = state.num_qubits
    rest = [i for i in range(n) if i not in idx]
    psi = np.transpose(state.tensor_view(), idx + rest)
    return psi.reshape(2 ** len(idx), -1)


@overload
def measure(
    state: StateVector,
    basis: MeasurementBasis,
    targets: Sequence[str],
    mode: Literal["enumerate"] = ...,
    rng: np.random.Generator | None = ...,
) -> list[MeasurementRecord]: ...


@overload
def measure(
    state: StateVector,
    basis: MeasurementBasis,
    targets: Sequence[str],
    mode: Literal["sample"],
    rng: np.random.Generator | None = ...,
) -> MeasurementRecord: ...


def measure(
    state: StateVector,
    basis: MeasurementBasis,
    targets: Sequence[str],
    mode: MeasureMode = "enumerate",
    rng: np.random.Generator | None = None,
) -> list[MeasurementRecord] | MeasurementRecord:
    """Projective measurement of ``targets`` in ``basis``.

    ``enumerate`` returns every outcome; ``sample`` draws one with ``rng``.
    For raw (unnormalized) states probabilities are the raw squared norms of
    the projected branches, and sampling picks outcomes proportionally to them.
    """
    idx = _target_indices(state, targets)
    if basis.num_qubits != len(idx):
        raise DimensionMismatchError(
            f"Basis '{basis.name}' spans {basis.num_qubits} qubits, got {len(idx)} targets"
        )
    split = _split(state, idx)
    # branches[i] = <v_i| (x) I applied to the state
    branches = basis.projectors.conj() @ split
    weights = np.einsum("ij,ij->i", branches.conj(), branches).real

    if mode == "sample":
        if rng is None:
            raise KernelError("Sample-mode measurement needs a seeded generator")
        total = weights.sum()
        if total <= 0.0:
            raise KernelError("Cannot sample from a zero vector")
        choice = int(rng.choice(len(weights), p=weights / total))
        return _record(state, basis, idx, choice, branches[choice], weights[choice])

    if mode != "enumerate":
        raise KernelError(f"Unknown measurement mode '{mode}'")
    records = [
        _record(state, basis, idx, i, branches[i], weights[i]) for i in range(len(weights))
    ]
    if state.normalized and abs(weights.sum() - 1.0) > 1e-10:
        LOGGER.warning("Outcome probabilities sum to %.15g", weights.sum())
    return records


def _record(
    state: StateVector,
    basis: MeasurementBasis,
    idx: list[int],
    outcome: int,
    branch: np.ndarray,
    weight: float,
) -> MeasurementRecord:
    rest = [i for i in range(state.num_qubits) if i not in idx]
    rest_labels = tuple(state.labels[i] for i in rest)
    targets = tuple(state.labels[i] for i in idx)
    probability = float(weight)
    if probability <= 0.0:
        return MeasurementRecord(basis, targets, outcome, 0.0, None, None, branch)

    unit = branch / np.sqrt(probability)
    remainder = StateVector(rest_labels, unit)
    full = np.outer(basis.projectors[outcome], unit).reshape([2] * state.num_qubits)
    full = np.transpose(full, np.argsort(idx + rest)).reshape(-1)
    collapsed = StateVector(state.labels, full)
    return MeasurementRecord(basis, targets, outcome, probability, collapsed, remainder, branch)


def partial_trace(
    source: StateVector | DensityMatrix,
    keep: Sequence[str],
) -> DensityMatrix:
    """Reduced density matrix on ``keep`` (in the order given)."""
    if not keep:
        raise EmptySelectionError("partial_trace needs at least one label to keep")
    if len(set(keep)) != len(keep):
        raise DuplicateLabelError(tuple(keep))

    if isinstance(source, StateVector):
        idx = [source.index_of(label) for label in keep]
        split = _split(source, idx)
        return DensityMatrix(split @ split.conj().T, tuple(keep))

    labels = source.labels
    idx = []
    for label in keep:
        if label not in labels:
            raise UnknownLabelError(label, labels)
        idx.append(labels.index(label))
    n = len(labels)
    rho = source.entries.reshape([2] * (2 * n))
    remaining = list(range(n))
    for i in sorted(set(range(n)) - set(idx), reverse=True):
        pos = remaining.index(i)
        rho = np.trace(rho, axis1=pos, axis2=pos + len(remaining))
        remaining.pop(pos)
    m = len(remaining)
    order = [remaining.index(i) for i in idx]
    rho = np.transpose(rho, order + [o + m for o in order])
    return DensityMatrix(rho.reshape(2**m, 2**m), tuple(keep))
