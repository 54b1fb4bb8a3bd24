"""Two-qubit correlation quantifiers: concurrence, entanglement of formation,
l1-norm and relative-entropy coherence, mutual information and
measurement-induced disturbance (MID).

Coherence and the X-state MID are taken in the computational basis. Entropies
are in bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import DomainError, NotNormalized, NotXState
from .linalg import (
    SIGMA_Y,
    density_spectrum,
    entropy_of_probs,
    partial_trace,
    psd_sqrt,
    von_neumann_entropy,
    binary_entropy,
)
from .states import is_x_state, validate_density

YY = np.kron(SIGMA_Y, SIGMA_Y)
X_TOL = 1e-10
# marginal eigenvalue gap below which the computational basis is used for MID
DEGENERACY_TOL = 1e-8


@dataclass(frozen=True)
class MeasureSet:
    concurrence: float
    eof: float
    c_l1: float
    c_r: float | None
    mid: float

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def spin_flip(rho) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    return YY @ np.conj(rho) @ YY


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho * spin_flip(rho), descending.

    Computed as singular values of sqrt(rho) (sy x sy) sqrt(rho)*, which equal
    those square roots and stay accurate to ~1e-15 for rank-deficient states.
    """
    s = psd_sqrt(rho)
    return np.linalg.svd(s @ YY @ s.conj(), compute_uv=False)


def concurrence_general(rho) -> float:
    rho = validate_density(rho)
    lam = wootters_lambdas(rho)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def _require_x(rho) -> np.ndarray:
    rho = validate_density(rho)
    if not is_x_state(rho, X_TOL):
        raise NotXState("state has weight outside the diagonal and anti-diagonal")
    return rho


def concurrence_x(rho) -> float:
    return _concurrence_x(_require_x(rho))


def _concurrence_x(rho) -> float:
    d = np.clip(np.diag(rho).real, 0.0, None)
    a = abs(rho[1, 2]) - math.sqrt(d[0] * d[3])
    b = abs(rho[0, 3]) - math.sqrt(d[1] * d[2])
    return 2.0 * max(0.0, a, b)


def concurrence_pure(psi) -> float:
    psi = np.asarray(psi, dtype=complex).ravel()
    norm = np.linalg.norm(psi)
    if psi.shape != (4,) or abs(norm - 1.0) > 1e-10:
        raise NotNormalized(f"expected a unit 4-vector, got norm {norm!r}")
    return float(abs(np.vdot(psi, YY @ psi.conj())))


def eof(c: float) -> float:
    """Entanglement of formation from concurrence, h((1 + sqrt(1 - C^2)) / 2)."""
    c = float(c)
    if not (-1e-12 <= c <= 1.0 + 1e-12):
        raise DomainError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def l1_coherence(rho) -> float:
    rho = validate_density(rho)
    a = np.abs(rho)
    return float(a.sum() - np.trace(a))


def _diag_entropy(rho) -> float:
    return entropy_of_probs(np.clip(np.diag(rho).real, 0.0, None))


def rel_entropy_coherence(rho) -> float:
    rho = validate_density(rho)
    return max(0.0, _diag_entropy(rho) - von_neumann_entropy(rho))


def mutual_information(rho) -> float:
    rho = validate_density(rho)
    return (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )


def _local_basis(marginal: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(marginal)
    if abs(w[1] - w[0]) < DEGENERACY_TOL:
        return np.eye(2, dtype=complex)
    return v


def measured_state(rho) -> np.ndarray:
    """Dephase rho in the product of the marginals' eigenbases.

    A degenerate marginal has no preferred eigenbasis; the computational basis
    is used for it.
    """
    rho = validate_density(rho)
    v = np.kron(_local_basis(partial_trace(rho, "A")), _local_basis(partial_trace(rho, "B")))
    local = v.conj().T @ rho @ v
    return v @ np.diag(np.diag(local)) @ v.conj().T


def mid_general(rho) -> float:
    rho = validate_density(rho)
    return max(0.0, mutual_information(rho) - mutual_information(measured_state(rho)))


def mid_x(rho) -> float:
    """MID of an X state: S(diag(rho)) - S(rho)."""
    rho = _require_x(rho)
    return max(0.0, _diag_entropy(rho) - entropy_of_probs(density_spectrum(rho)))


def measure_all(rho) -> MeasureSet:
    rho = validate_density(rho)
    s_state = entropy_of_probs(density_spectrum(rho))
    s_diag = _diag_entropy(rho)
    c_r = max(0.0, s_diag - s_state)
    if is_x_state(rho, X_TOL):
        c = _concurrence_x(rho)
        mid = c_r  # same formula for X states
    else:
        c = concurrence_general(rho)
        mid = mid_general(rho)
    a = np.abs(rho)
    return MeasureSet(
        concurrence=c,
        eof=eof(c),
        c_l1=float(a.sum() - np.trace(a)),
        c_r=c_r,
        mid=mid,
    )
