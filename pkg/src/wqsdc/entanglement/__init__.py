"""Concurrence fill and the W_n family."""

from wqsdc.entanglement.concurrence import (
    ConcurrenceTriple,
    FillReport,
    concurrence_fill,
    concurrence_triple,
    fill_closed_form,
    fill_from_triple,
    w_class_state,
    w_class_triple,
)
from wqsdc.entanglement.exceptions import (
    BrokenTripleError,
    EntanglementError,
    InvalidFamilyIndexError,
    QubitCountError,
)
from wqsdc.entanglement.wn import WnParams, wn_fill, wn_state

__all__ = [
    # Concurrence
    "ConcurrenceTriple",
    "FillReport",
    "concurrence_fill",
    "concurrence_triple",
    "fill_closed_form",
    "fill_from_triple",
    "w_class_state",
    "w_class_triple",
    # Exceptions
    "BrokenTripleError",
    "EntanglementError",
    "InvalidFamilyIndexError",
    "QubitCountError",
    # W_n family
    "WnParams",
    "wn_fill",
    "wn_state",
]
