"""Dense complex linear algebra for small (two- to four-qubit) operators.

Every matrix is a plain ``numpy.ndarray`` of dtype ``complex128``. All
logarithms are base 2.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DomainError, InvalidDensity, NonHermitianInput

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
TRACE_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


class HermitianSpectrum(NamedTuple):
    eigenvalues: np.ndarray  # real, descending
    eigenvectors: np.ndarray  # columns, unitary


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = np.kron(out, as_matrix(f))
    return out


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def max_abs(a) -> float:
    """Entrywise max-norm, 0.0 for empty input."""
    a = np.asarray(a)
    return float(np.abs(a).max()) if a.size else 0.0


def hermiticity_error(a) -> float:
    a = as_matrix(a)
    return max_abs(a - a.conj().T)


def unitarity_error(u) -> float:
    u = as_matrix(u)
    return max_abs(u @ u.conj().T - np.eye(u.shape[0]))


def _require_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    err = hermiticity_error(a)
    if err > tol:
        raise NonHermitianInput(f"matrix is not Hermitian: max|A - A^dag| = {err:.3e}")


def herm_eig(a) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues in descending order."""
    a = as_matrix(a)
    _require_hermitian(a)
    h = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(h)
    return HermitianSpectrum(w[::-1].copy(), v[:, ::-1].copy())


def propagator(h, t: float) -> np.ndarray:
    """Return ``exp(-i t H)`` (hbar = 1) via the eigendecomposition of ``h``."""
    w, v = herm_eig(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def partial_trace(rho, keep: str = "A") -> np.ndarray:
    """Reduced 2x2 state of subsystem ``keep`` ('A' or 'B') of a two-qubit state."""
    r = as_matrix(rho)
    if r.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit operator, got {r.shape}")
    t = r.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ajbj->ab", t)
    if keep == "B":
        return np.einsum("jajb->ab", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def entropy_of_probs(probs) -> float:
    """Shannon entropy in bits with 0 log 0 = 0."""
    p = np.asarray(probs, dtype=float)
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum()) + 0.0


def density_spectrum(rho) -> np.ndarray:
    """Eigenvalues of a density matrix with the small negative clamp applied.

    Raises InvalidDensity if the input is not Hermitian, not unit trace, or has
    an eigenvalue below ``-PSD_TOL``.
    """
    r = as_matrix(rho)
    herr = hermiticity_error(r)
    if herr > HERMITIAN_TOL:
        raise InvalidDensity(f"not Hermitian: max|rho - rho^dag| = {herr:.3e}")
    tr = np.trace(r).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidDensity(f"trace is {tr!r}, expected 1")
    w = np.linalg.eigvalsh(0.5 * (r + r.conj().T))
    if w.min() < -PSD_TOL:
        raise InvalidDensity(f"negative eigenvalue {w.min():.3e}")
    return np.clip(w, 0.0, None)


def von_neumann_entropy(rho) -> float:
    return entropy_of_probs(density_spectrum(rho))


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x)."""
    x = float(x)
    if not (-1e-12 <= x <= 1.0 + 1e-12):
        raise DomainError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    return entropy_of_probs([x, 1.0 - x])


def psd_sqrt(rho) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix (negative eigenvalues clamped)."""
    w, v = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
