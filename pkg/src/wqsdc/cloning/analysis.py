"""Reduced outputs and Hilbert-Schmidt distance analytics for the cloner."""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np
from scipy import integrate

from wqsdc.cloning.exceptions import CloningError, InputRangeError
from wqsdc.cloning.machine import (
    CloneMachineSpec,
    CloneOutput,
    InputQubit,
    clone,
)
from wqsdc.kernel import DensityMatrix, fidelity, hs_distance, partial_trace

LOGGER = logging.getLogger(__name__)

Which = Literal["original", "copy", "pair"]
Style = Literal["exact", "paper_diagonal"]

DEFAULT_PANELS = 10_000

_KEEP: dict[str, list[str]] = {
    "original": ["a"],
    "copy": ["b"],
    "pair": ["a", "b"],
}

_XI = np.array([0.0, 1.0, 1.0, 0.0], dtype=np.complex128) / np.sqrt(2.0)


def _shrink_factors(spec: CloneMachineSpec) -> tuple[float, float]:
    """(2|p|^2 <Q0|Q0>, 2|q|^2 <Q1|Q1>) with the unitarity norms."""
    n0, n1 = spec.unitarity_norms()
    return 2.0 * spec.p_sq * n0, 2.0 * spec.q_sq * n1


def reduced_outputs(out: CloneOutput, which: Which = "original", style: Style = "exact") -> DensityMatrix:
    """Reduced density matrix of the original, the copy, or both.

    ``exact`` traces the (renormalized) output. ``paper_diagonal`` rebuilds
    the diagonal-block expressions with machine cross terms dropped and the
    |xi><xi| weight traced as if it contributed to both diagonal entries,
    always using the unitarity norms of the machine kets.
    """
    if which not in _KEEP:
        raise CloningError(f"Unknown output selection '{which}'")
    if style == "exact":
        state = out.state if out.normalized else out.state.renormalized()
        return partial_trace(state, _KEEP[which])
    if style != "paper_diagonal":
        raise CloningError(f"Unknown reduction style '{style}'")
    if out.input is None:
        raise CloningError("paper_diagonal reduction needs the input amplitudes")

    m = out.input.m
    n0, n1 = out.spec.unitarity_norms()
    if which == "pair":
        xi = np.outer(_XI, _XI.conj())
        entries = (
            m * n0 * np.diag([1.0, 0.0, 0.0, 0.0])
            + 2.0 * m * out.spec.p_sq * n0 * xi
            + (1.0 - m) * n1 * np.diag([0.0, 0.0, 0.0, 1.0])
            + 2.0 * (1.0 - m) * out.spec.q_sq * n1 * xi
        )
        return DensityMatrix(entries, ("a", "b"))
    return DensityMatrix(np.diag(_paper_diagonal_entries(m, out.spec)), tuple(_KEEP[which]))


def _paper_diagonal_entries(m: float | np.ndarray, spec: CloneMachineSpec) -> tuple:
    shrink_p, shrink_q = _shrink_factors(spec)
    return m + (1.0 - m) * shrink_q, (1.0 - m) + m * shrink_p


def analytic_hs_distance(m: float, spec: CloneMachineSpec) -> float:
    """D_a as a quadratic in m = |x|^2, with (1 + 2|.|^2)^2 denominators."""
    if not 0.0 <= m <= 1.0:
        raise InputRangeError("m", m, "[0, 1]")
    return float(_analytic_grid(np.asarray(m, dtype=float), spec))


def _analytic_grid(ms: np.ndarray, spec: CloneMachineSpec) -> np.ndarray:
    q4 = 4.0 * spec.q_sq**2 / (1.0 + 2.0 * spec.q_sq) ** 2
    p4 = 4.0 * spec.p_sq**2 / (1.0 + 2.0 * spec.p_sq) ** 2
    return 2.0 * ms**2 * (q4 / 2.0 + p4 / 2.0 - 1.0) + 2.0 * ms * (1.0 - q4) + q4


def da_from_matrices(x: complex, y: complex, spec: CloneMachineSpec, style: Style = "paper_diagonal") -> float:
    """HS distance between the input and the reduced original, from matrices."""
    qubit = InputQubit(x, y)
    rho_in = DensityMatrix.from_state(qubit.as_state("a"))
    rho_a = reduced_outputs(clone(qubit, spec), "original", style)
    return hs_distance(rho_in, rho_a)


def _paper_diagonal_da_grid(ms: np.ndarray, spec: CloneMachineSpec) -> np.ndarray:
    """Vectorized HS distance of stacked 2x2 input and paper_diagonal matrices."""
    xy = np.sqrt(ms * (1.0 - ms))
    rho_in = np.empty((ms.size, 2, 2))
    rho_in[:, 0, 0] = ms
    rho_in[:, 0, 1] = xy
    rho_in[:, 1, 0] = xy
    rho_in[:, 1, 1] = 1.0 - ms
    rho_a = np.zeros_like(rho_in)
    rho_a[:, 0, 0], rho_a[:, 1, 1] = _paper_diagonal_entries(ms, spec)
    return np.sum(np.abs(rho_in - rho_a) ** 2, axis=(1, 2))


def average_hs_distance(
    spec: CloneMachineSpec,
    method: Literal["closed_form", "numeric"] = "closed_form",
    panels: int = DEFAULT_PANELS,
    integrand: Literal["analytic", "matrix"] = "analytic",
) -> float:
    """Average of D_a over m in [0, 1].

    ``numeric`` runs composite Simpson over ``panels`` intervals, either on the
    analytic quadratic or on HS distances rebuilt from the paper_diagonal
    matrices.
    """
    if method == "closed_form":
        q_term = spec.q_sq**2 / (1.0 + 2.0 * spec.q_sq) ** 2
        p_term = spec.p_sq**2 / (1.0 + 2.0 * spec.p_sq) ** 2
        return 4.0 / 3.0 * (q_term + p_term) + 1.0 / 3.0
    if method != "numeric":
        raise CloningError(f"Unknown averaging method '{method}'")
    if panels < 2 or panels % 2:
        raise CloningError(f"Simpson needs an even panel count >= 2, got {panels}")

    ms = np.linspace(0.0, 1.0, panels + 1)
    if integrand == "analytic":
        values = _analytic_grid(ms, spec)
    elif integrand == "matrix":
        values = _paper_diagonal_da_grid(ms, spec)
    else:
        raise CloningError(f"Unknown integrand '{integrand}'")
    result = float(integrate.simpson(values, x=ms))
    LOGGER.debug("Simpson average over %d panels (%s): %.15g", panels, integrand, result)
    return result


def fidelity_of_copy(input: InputQubit, spec: CloneMachineSpec) -> float:
    """<chi| rho_b |chi> for the exact reduced copy."""
    rho_b = reduced_outputs(clone(input, spec), "copy", "exact")
    return fidelity(input.as_state("b"), rho_b)
