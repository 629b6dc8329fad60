"""Two-parameter symmetric cloning machine and its distance analytics."""

from wqsdc.cloning.analysis import (
    DEFAULT_PANELS,
    analytic_hs_distance,
    average_hs_distance,
    da_from_matrices,
    fidelity_of_copy,
    reduced_outputs,
)
from wqsdc.cloning.exceptions import CloningError, InputRangeError
from wqsdc.cloning.machine import (
    CLONE_LABELS,
    CloneMachineSpec,
    CloneMap,
    CloneOutput,
    Convention,
    InputQubit,
    build_clone_map,
    clone,
    clone_state,
)

__all__ = [
    # Analysis
    "DEFAULT_PANELS",
    "analytic_hs_distance",
    "average_hs_distance",
    "da_from_matrices",
    "fidelity_of_copy",
    "reduced_outputs",
    # Exceptions
    "CloningError",
    "InputRangeError",
    # Machine
    "CLONE_LABELS",
    "CloneMachineSpec",
    "CloneMap",
    "CloneOutput",
    "Convention",
    "InputQubit",
    "build_clone_map",
    "clone",
    "clone_state",
]
