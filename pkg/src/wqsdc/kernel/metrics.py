"""Distance and fidelity metrics."""

from __future__ import annotations

import numpy as np

from wqsdc.kernel.exceptions import DimensionMismatchError, KernelError
from wqsdc.kernel.state import DensityMatrix, StateVector


def hs_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Hilbert-Schmidt distance Tr[(rho - sigma)(rho - sigma)^dag]."""
    if rho.dimension != sigma.dimension:
        raise DimensionMismatchError(
            f"Cannot compare {rho.dimension}- and {sigma.dimension}-dimensional operators"
        )
    diff = rho.entries - sigma.entries
    return float(np.sum(np.abs(diff) ** 2))


def fidelity(pure: StateVector, against: StateVector | DensityMatrix) -> float:
    """|<pure|against>|^2 for pure targets, <pure|rho|pure> for mixed ones."""
    if not pure.normalized:
        raise KernelError("fidelity() needs a normalized reference state")
    vec = pure.amplitudes
    if isinstance(against, StateVector):
        if against.amplitudes.size != vec.size:
            raise DimensionMismatchError(
                f"State sizes differ: {vec.size} vs {against.amplitudes.size}"
            )
        value = abs(np.vdot(vec, against.amplitudes)) ** 2
    else:
        if against.dimension != vec.size:
            raise DimensionMismatchError(
                f"State size {vec.size} vs operator dimension {against.dimension}"
            )
        value = np.vdot(vec, against.entries @ vec).real
    return float(np.clip(value, 0.0, 1.0))


def equal_up_to_global_phase(u: np.ndarray, v: np.ndarray, atol: float = 1e-12) -> bool:
    """True when ``u = e^{i theta} v`` entrywise within ``atol``."""
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        return False
    pivot = int(np.argmax(np.abs(v)))
    if abs(v[pivot]) <= atol:
        return bool(np.max(np.abs(u), initial=0.0) <= atol)
    if abs(u[pivot]) <= atol:
        return False
    phase = u[pivot] / v[pivot]
    phase /= abs(phase)
    return bool(np.max(np.abs(u - phase * v)) <= atol)
