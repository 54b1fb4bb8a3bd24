"""Initial two-qubit states and density-matrix validation."""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, NonHermitian, NotPSD, TraceNotOne
from .linalg import HERMITIAN_TOL, PSD_TOL, TRACE_TOL, as_matrix, hermiticity_error


def bell_state(x: int, y: int) -> np.ndarray:
    """|beta_xy> = (|0,y> + (-1)^x |1,1-y>) / sqrt(2)."""
    if x not in (0, 1) or y not in (0, 1):
        raise ValueError(f"Bell labels must be bits, got ({x!r}, {y!r})")
    v = np.zeros(4, dtype=complex)
    v[y] = 1.0
    v[2 + (1 - y)] = (-1) ** x
    return v / math.sqrt(2.0)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"mixing probability {p!r} outside [0, 1]")
    return p


def werner_state(p: float) -> np.ndarray:
    """(1-p) I/4 + p |beta00><beta00|."""
    p = _check_p(p)
    return (1 - p) * np.eye(4, dtype=complex) / 4 + p * projector(bell_state(0, 0))


def xlike_state(p: float) -> np.ndarray:
    """p |beta11><beta11| + (1-p)/2 (|beta01><beta01| + |beta00><beta00|)."""
    p = _check_p(p)
    return p * projector(bell_state(1, 1)) + 0.5 * (1 - p) * (
        projector(bell_state(0, 1)) + projector(bell_state(0, 0))
    )


STATES = {"werner": werner_state, "xlike": xlike_state}


def validate_density(m) -> np.ndarray:
    """Return ``m`` as a complex 4x4 array if it is a valid density matrix, else raise."""
    r = as_matrix(m)
    if r.shape != (4, 4):
        raise ValueError(f"expected 4x4, got {r.shape}")
    herr = hermiticity_error(r)
    if herr > HERMITIAN_TOL:
        raise NonHermitian(f"Hermiticity violated by {herr:.3e}")
    tr = np.trace(r).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(f"trace deviates from 1 by {abs(tr - 1.0):.3e} (trace = {tr:.12g})")
    wmin = np.linalg.eigvalsh(0.5 * (r + r.conj().T)).min()
    if wmin < -PSD_TOL:
        raise NotPSD(f"smallest eigenvalue {wmin:.3e} is below -{PSD_TOL:g}")
    return r


_OFF_X = ~(np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool)))


def x_pattern_error(rho) -> float:
    """Largest magnitude among entries off the diagonal and anti-diagonal."""
    return float(np.abs(np.asarray(rho))[_OFF_X].max())


def is_x_state(rho, tol: float = 1e-10) -> bool:
    return x_pattern_error(rho) < tol
