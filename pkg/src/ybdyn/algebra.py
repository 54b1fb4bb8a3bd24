"""Temperley-Lieb generators, Yang-Baxter R-matrices and relation checkers.

Sites are 1-based: on an ``n``-site chain the operator ``X_i`` acts on sites
``(i, i+1)`` with identities elsewhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple

import numpy as np

from .errors import DegenerateBasis, SingularComposition
from .linalg import I2, I4, max_abs
from .spin import OPS

TLA_FAMILIES = ("U1", "U2", "U3")
R_FAMILIES = ("R1", "R2", "R3")
LOOP_VALUE = {"U1": 2.0, "U2": 2.0, "U3": math.sqrt(2.0)}
# R-matrix family -> the TLA generator it is Yang-Baxterized from
GENERATOR_OF = {"R1": "U1", "R2": "U2", "R3": "U3"}


def _check_sign(epsilon: int) -> int:
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon!r}")
    return int(epsilon)


@dataclass(frozen=True)
class TlaGenerator:
    family: str
    phi: float = 0.0
    epsilon: int = 1

    def __post_init__(self):
        if self.family not in TLA_FAMILIES:
            raise ValueError(f"unknown TLA family {self.family!r}")
        _check_sign(self.epsilon)

    @property
    def loop_d(self) -> float:
        return LOOP_VALUE[self.family]


@dataclass(frozen=True)
class RMatrixSpec:
    family: str
    theta: float
    phi: float = 0.0
    epsilon: int = 1

    def __post_init__(self):
        if self.family not in R_FAMILIES:
            raise ValueError(f"unknown R-matrix family {self.family!r}")
        _check_sign(self.epsilon)


@dataclass(frozen=True)
class SpectralParams:
    mu: float
    nu: float
    beta_squared: float = 0.0


def build_U(spec: TlaGenerator) -> np.ndarray:
    e = np.exp(1j * spec.phi)
    if spec.family == "U1":
        m = np.array([[1, 0, 0, e], [0, 0, 0, 0], [0, 0, 0, 0], [e.conjugate(), 0, 0, 1]])
    elif spec.family == "U2":
        m = np.array([[0, 0, 0, 0], [0, 1, e, 0], [0, e.conjugate(), 1, 0], [0, 0, 0, 0]])
    else:
        ie = 1j * spec.epsilon
        m = np.array(
            [[1, 0, 0, e], [0, 1, ie, 0], [0, -ie, 1, 0], [e.conjugate(), 0, 0, 1]]
        ) / math.sqrt(2.0)
    return m.astype(complex)


def embed(op: np.ndarray, site: int, sites: int) -> np.ndarray:
    """Place a two-site operator on sites (site, site+1) of a chain of qubits."""
    if not 1 <= site < sites:
        raise ValueError(f"site {site} out of range for {sites} sites")
    left = np.eye(2 ** (site - 1), dtype=complex)
    right = np.eye(2 ** (sites - site - 1), dtype=complex)
    return np.kron(np.kron(left, op), right)


class TlaResiduals(NamedTuple):
    braid: float  # max over i of |U_i U_{i+1} U_i - U_i| and |U_{i+1} U_i U_{i+1} - U_{i+1}|
    idempotent: float  # |U^2 - d U|
    far_commutation: float | None  # |[U_1, U_3]|, 4 sites only


def check_tla(family: str, phi: float = 0.0, epsilon: int = 1, sites: int = 3) -> TlaResiduals:
    if sites not in (3, 4):
        raise ValueError(f"sites must be 3 or 4, got {sites}")
    spec = TlaGenerator(family, phi, epsilon)
    u = build_U(spec)
    d = spec.loop_d
    gens = [embed(u, i, sites) for i in range(1, sites)]
    braid = 0.0
    for a, b in zip(gens, gens[1:]):
        braid = max(braid, max_abs(a @ b @ a - a), max_abs(b @ a @ b - b))
    idem = max(max_abs(g @ g - d * g) for g in gens)
    far = None
    if sites == 4:
        far = max_abs(gens[0] @ gens[2] - gens[2] @ gens[0])
    return TlaResiduals(braid, idem, far)


def build_R(spec: RMatrixSpec) -> np.ndarray:
    c = math.cos(spec.theta / 2)
    s = math.sin(spec.theta / 2)
    e = np.exp(1j * spec.phi)
    o = OPS
    if spec.family == "R1":
        return (
            (c + 0.5j * s) * I4
            - 2j * s * (o.sz1 @ o.sz2)
            - 1j * s * (e * (o.sp1 @ o.sp2) + e.conjugate() * (o.sm1 @ o.sm2))
        )
    if spec.family == "R2":
        return (
            (c + 0.5j * s) * I4
            + 2j * s * (o.sz1 @ o.sz2)
            - 1j * s * (e * (o.sp1 @ o.sm2) + e.conjugate() * (o.sm1 @ o.sp2))
        )
    return (
        -c * I4
        - 1j * s * (e * (o.sp1 @ o.sp2) + e.conjugate() * (o.sm1 @ o.sm2))
        + spec.epsilon * s * (o.sp1 @ o.sm2 - o.sm1 @ o.sp2)
    )


def check_constant_ybe(r: np.ndarray) -> float:
    """Max-norm residual of the braid relation (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)."""
    a = np.kron(r, I2)
    b = np.kron(I2, r)
    return max_abs(a @ b @ a - b @ a @ b)


def theta_of_mu(family: str, mu: float) -> float:
    """Rapidity -> angle map: cos(theta) = (1-mu^2)/(1+mu^2) for R1/R2, 1/cosh(mu) for R3."""
    if family in ("R1", "R2"):
        c = (1.0 - mu * mu) / (1.0 + mu * mu)
    elif family == "R3":
        c = 1.0 / math.cosh(mu)
    else:
        raise ValueError(f"unknown R-matrix family {family!r}")
    return math.acos(min(1.0, max(-1.0, c)))


Rule = Literal["additive", "rational"]


def compose(mu: float, nu: float, rule: Rule, beta_squared: float = 0.0) -> float:
    if rule == "additive":
        return mu + nu
    if rule == "rational":
        den = 1.0 + beta_squared * mu * nu
        if abs(den) < 1e-12:
            raise SingularComposition(
                f"1 + beta^2 mu nu = {den:.3e} for mu={mu}, nu={nu}, beta^2={beta_squared}"
            )
        return (mu + nu) / den
    raise ValueError(f"unknown composition rule {rule!r}")


def check_spectral_ybe(
    family: str,
    params: SpectralParams,
    rule: Rule = "additive",
    phi: float = 0.0,
    epsilon: int = 1,
    theta_map: Callable[[str, float], float] = theta_of_mu,
) -> float:
    """Residual of R_i(mu) R_{i+1}(mu o nu) R_i(nu) = R_{i+1}(nu) R_i(mu o nu) R_{i+1}(mu)."""
    mu, nu = params.mu, params.nu
    mid = compose(mu, nu, rule, params.beta_squared)

    def r(x):
        return build_R(RMatrixSpec(family, theta_map(family, x), phi, epsilon))

    def ri(x):
        return np.kron(r(x), I2)

    def rj(x):
        return np.kron(I2, r(x))

    lhs = ri(mu) @ rj(mid) @ ri(nu)
    rhs = rj(nu) @ ri(mid) @ rj(mu)
    return max_abs(lhs - rhs)


def scan_beta_squared(
    family: str,
    grid=(0.3, 0.7, 1.1),
    betas=(-1.0, 1.0),
    phi: float = 0.0,
) -> dict[float, float]:
    """Worst rational-rule residual over a (mu, nu) grid, per candidate beta^2."""
    out = {}
    for b2 in betas:
        out[b2] = max(
            check_spectral_ybe(family, SpectralParams(m, n, b2), "rational", phi)
            for m in grid
            for n in grid
        )
    return out


def decompose_R(r: np.ndarray, u: np.ndarray) -> tuple[complex, complex, float]:
    """Least-squares fit ``r ~ a I + b u``; returns (a, b, max-norm residual)."""
    u = np.asarray(u, dtype=complex)
    basis = np.column_stack([I4.ravel(), u.ravel()])
    if np.linalg.matrix_rank(basis, tol=1e-12) < 2:
        raise DegenerateBasis("u is proportional to the identity")
    coef, *_ = np.linalg.lstsq(basis, np.asarray(r, dtype=complex).ravel(), rcond=None)
    a, b = complex(coef[0]), complex(coef[1])
    return a, b, max_abs(r - a * I4 - b * u)
