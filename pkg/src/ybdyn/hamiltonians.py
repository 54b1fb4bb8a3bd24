"""Base Hamiltonian H0 and the three Hamiltonians obtained from it by R-matrix conjugation."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .algebra import RMatrixSpec, build_R
from .linalg import herm_eig
from .spin import OPS

MODELS = ("h1", "h2", "h3")


@dataclass(frozen=True)
class ModelParams:
    """Field parameters B, J, zz-coupling g and R-matrix angles.

    The site fields are derived, mu1 = B + J and mu2 = B - J, so that relation
    holds exactly in floating point.
    """

    B: float = 0.0
    J: float = 0.0
    g: float = 0.0
    theta: float = math.pi / 2
    phi: float = 0.0
    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")

    @classmethod
    def from_fields(cls, mu1: float, mu2: float, g: float = 0.0, **kw) -> "ModelParams":
        return cls(B=0.5 * (mu1 + mu2), J=0.5 * (mu1 - mu2), g=g, **kw)

    @property
    def mu1(self) -> float:
        return self.B + self.J

    @property
    def mu2(self) -> float:
        return self.B - self.J

    def with_epsilon(self, epsilon: int) -> "ModelParams":
        return replace(self, epsilon=epsilon)


def _warn_epsilon(model: str, p: ModelParams) -> None:
    if p.epsilon != 1:
        warnings.warn(f"epsilon={p.epsilon} has no effect on {model}", stacklevel=3)


def build_h0(p: ModelParams) -> np.ndarray:
    o = OPS
    return p.mu1 * o.sz1 + p.mu2 * o.sz2 + p.g * (o.sz1 @ o.sz2)


def build_h(model: str, p: ModelParams) -> np.ndarray:
    """Closed-form Yang-Baxterized Hamiltonian at general (theta, phi)."""
    o = OPS
    B, J, g = p.B, p.J, p.g
    c, s = math.cos(p.theta), math.sin(p.theta)
    e = np.exp(1j * p.phi)
    zsum, zdiff, zz = o.sz1 + o.sz2, o.sz1 - o.sz2, o.sz1 @ o.sz2
    pair_pp = e * (o.sp1 @ o.sp2) - e.conjugate() * (o.sm1 @ o.sm2)
    if model == "h1":
        _warn_epsilon(model, p)
        return B * c * zsum + J * zdiff + g * zz + 1j * B * s * pair_pp
    if model == "h2":
        _warn_epsilon(model, p)
        pair_pm = e * (o.sp1 @ o.sm2) - e.conjugate() * (o.sm1 @ o.sp2)
        return B * zsum + J * c * zdiff + g * zz + 1j * J * s * pair_pm
    if model == "h3":
        flip = o.sp1 @ o.sm2 + o.sm1 @ o.sp2
        return (
            B * c * zsum
            - 1j * B * s * pair_pp
            + g * zz
            + J * c * zdiff
            + p.epsilon * J * s * flip
        )
    raise ValueError(f"unknown model {model!r}")


def build_h_right_angle(model: str, p: ModelParams) -> np.ndarray:
    """The theta = pi/2, epsilon = +1 reduced forms, written out independently of build_h."""
    o = OPS
    B, J, g = p.B, p.J, p.g
    e = np.exp(1j * p.phi)
    zz = o.sz1 @ o.sz2
    pair_pp = e * (o.sp1 @ o.sp2) - e.conjugate() * (o.sm1 @ o.sm2)
    if model == "h1":
        return J * (o.sz1 - o.sz2) + g * zz + 1j * B * pair_pp
    if model == "h2":
        pair_pm = e * (o.sp1 @ o.sm2) - e.conjugate() * (o.sm1 @ o.sp2)
        return B * (o.sz1 + o.sz2) + g * zz + 1j * J * pair_pm
    if model == "h3":
        return J * (o.sp1 @ o.sm2 + o.sm1 @ o.sp2) + g * zz - 1j * B * pair_pp
    raise ValueError(f"unknown model {model!r}")


def conjugate_h0(family: str, p: ModelParams) -> np.ndarray:
    """R H0 R^dagger with R = build_R(family, theta, phi, epsilon)."""
    r = build_R(RMatrixSpec(family, p.theta, p.phi, p.epsilon))
    return r @ build_h0(p) @ r.conj().T


def spectrum_of(h: np.ndarray) -> np.ndarray:
    return herm_eig(h).eigenvalues
