"""Unitary evolution of the input states, closed-form measure expressions,
and parameter sweeps that compare the two.

Sweeps are parametrized by scaled time (B t for h1/h3, J t for h2); the raw
evolution time is scaled_time / B (or / J).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, NoOracle, ZeroScaleError
from .hamiltonians import MODELS, ModelParams, build_h
from .linalg import binary_entropy, herm_eig
from .measures import MeasureSet, eof, measure_all
from .states import STATES, validate_density

MEASURE_NAMES = ("concurrence", "eof", "c_l1", "mid")
ORACLE_FORMS = ("published", "exact")
ORACLE_PAIRS = {("h1", "werner"), ("h1", "xlike"), ("h2", "werner"), ("h2", "xlike")}


def evolve(rho, h, t: float) -> np.ndarray:
    """sigma = exp(-i t H) rho exp(i t H)."""
    return Evolver(h).evolve(validate_density(rho), t)


class Evolver:
    """Caches the eigendecomposition of a fixed Hamiltonian."""

    def __init__(self, h):
        self.energies, self.vectors = herm_eig(h)

    def unitary(self, t: float) -> np.ndarray:
        v = self.vectors
        return (v * np.exp(-1j * t * self.energies)) @ v.conj().T

    def evolve(self, rho, t: float) -> np.ndarray:
        u = self.unitary(t)
        s = u @ rho @ u.conj().T
        return 0.5 * (s + s.conj().T)


# closed forms --------------------------------------------------------------


def _xlog(x: float) -> float:
    """x log2 x with 0 log 0 = 0 (tiny negative rounding treated as 0)."""
    return x * math.log2(x) if x > 0 else 0.0


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"state parameter p={p!r} outside [0, 1]")
    return p


def _check_form(form: str) -> None:
    if form not in ORACLE_FORMS:
        raise ValueError(f"oracle form must be one of {ORACLE_FORMS}, got {form!r}")


@dataclass(frozen=True)
class AnalyticAuxiliaries:
    x_plus: float
    x_minus: float
    y_plus: float
    y_minus: float
    z_plus: float
    z_minus: float


def auxiliaries(p: float, phi: float, scaled_time: float) -> AnalyticAuxiliaries:
    k = math.cos(phi) * math.sin(2 * scaled_time)
    return AnalyticAuxiliaries(
        x_plus=1 + p + 2 * p * k,
        x_minus=1 + p - 2 * p * k,
        y_plus=(1 - p) * (1 + k),
        y_minus=(1 - p) * (1 - k),
        z_plus=(1 + p + (1 - 3 * p) * k) / 4,
        z_minus=(1 + p - (1 - 3 * p) * k) / 4,
    )


def _damping(phi: float, scaled_time: float) -> float:
    """sqrt(1 - cos^2(phi) sin^2(2 s))."""
    v = 1.0 - (math.cos(phi) * math.sin(2 * scaled_time)) ** 2
    return math.sqrt(max(v, 0.0))


def _measure_set(c: float, c_l1: float, mid: float) -> MeasureSet:
    c = min(max(c, 0.0), 1.0)
    return MeasureSet(concurrence=c, eof=eof(c), c_l1=c_l1, c_r=None, mid=mid)


def analytic_h1_werner(p: float, phi: float, bt: float, form: str = "published") -> MeasureSet:
    _check_form(form)
    p = _check_p(p)
    aux = auxiliaries(p, phi, bt)
    c_l1 = abs(p * _damping(phi, bt))
    c = c_l1 - abs(1 - p) / 2
    mid = 0.25 * (_xlog(1 - p) + _xlog(1 + 3 * p) - _xlog(aux.x_plus) - _xlog(aux.x_minus))
    return _measure_set(c, c_l1, mid)


def analytic_h1_xlike(p: float, phi: float, bt: float, form: str = "published") -> MeasureSet:
    """H1 acting on the X-like input.

    ``form="published"`` uses the published MID expression, which assumes the
    Werner spectrum ((1+3p)/4, (1-p)/4 x3). ``form="exact"`` uses the actual
    spectrum of this state, {p, (1-p)/2, (1-p)/2, 0}.
    """
    _check_form(form)
    p = _check_p(p)
    aux = auxiliaries(p, phi, bt)
    q = _damping(phi, bt)
    c_l1 = 0.5 * (abs((1 - p) * q) + abs(1 - 3 * p))
    c = abs(1 - 3 * p) - c_l1
    if form == "published":
        mid = 0.25 * (
            3 * _xlog(1 - p)
            + _xlog(1 + 3 * p)
            - 2 * _xlog(1 + p)
            - _xlog(aux.y_plus)
            - _xlog(aux.y_minus)
        )
    else:
        s_diag = -(2 * _xlog((1 + p) / 4) + _xlog(aux.y_plus / 4) + _xlog(aux.y_minus / 4))
        s_state = -(_xlog(p) + 2 * _xlog((1 - p) / 2))
        mid = s_diag - s_state
    return _measure_set(c, c_l1, mid)


def analytic_h2_werner(p: float, form: str = "published") -> MeasureSet:
    """Time-independent: H2 acts trivially on the Werner input up to phases."""
    _check_form(form)
    p = _check_p(p)
    c = (3 * p - 1) / 2
    mid = 0.25 * (_xlog(1 - p) + _xlog(1 + 3 * p) - 2 * _xlog(1 + p))
    return _measure_set(c, p, mid)


def analytic_h2_xlike(p: float, phi: float, jt: float, form: str = "published") -> MeasureSet:
    """H2 acting on the X-like input.

    ``form="published"`` keeps only the |rho23| branch of the X-state concurrence.
    ``form="exact"`` also includes the |rho14| - sqrt(rho22 rho33) branch,
    which dominates for small p.
    """
    _check_form(form)
    p = _check_p(p)
    aux = auxiliaries(p, phi, jt)
    q = _damping(phi, jt)
    c_l1 = 0.5 * (abs(1 - p) + abs((1 - 3 * p) * q))
    c = c_l1 - abs(1 - p)
    if form == "exact":
        other = 0.5 * (1 - p) - 2 * math.sqrt(max(aux.z_plus * aux.z_minus, 0.0))
        c = max(c, other)
    mid = (
        -binary_entropy(p)
        - 0.5 * _xlog(1 - p)
        - _xlog(aux.z_plus)
        - _xlog(aux.z_minus)
    )
    return _measure_set(c, c_l1, mid)


def analytic(
    model: str, state: str, p: float, phi: float, scaled_time: float, form: str = "published"
) -> MeasureSet:
    if (model, state) not in ORACLE_PAIRS:
        raise NoOracle(f"no closed form for model={model!r}, state={state!r}")
    if model == "h1":
        fn = analytic_h1_werner if state == "werner" else analytic_h1_xlike
        return fn(p, phi, scaled_time, form)
    if state == "werner":
        return analytic_h2_werner(p, form)
    return analytic_h2_xlike(p, phi, scaled_time, form)


def esd_threshold(phi: float) -> float:
    """p above which H1-on-Werner concurrence stays positive for all times."""
    return 1.0 / (1.0 + 2.0 * abs(math.sin(phi)))


# sweeps --------------------------------------------------------------------


def _strictly_increasing(xs: Sequence[float]) -> bool:
    return all(b > a for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class SweepSpec:
    model: str
    state: str
    p_grid: tuple[float, ...]
    scaled_time_grid: tuple[float, ...]
    phi: float = math.pi / 4
    theta: float = math.pi / 2
    B: float = 1.0
    J: float = 1.0
    g: float = 0.5
    epsilon: int = 1

    def __post_init__(self):
        object.__setattr__(self, "p_grid", tuple(float(x) for x in self.p_grid))
        object.__setattr__(
            self, "scaled_time_grid", tuple(float(x) for x in self.scaled_time_grid)
        )
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.state not in STATES:
            raise ValueError(f"unknown state {self.state!r}")
        for name in ("p_grid", "scaled_time_grid"):
            grid = getattr(self, name)
            if not grid:
                raise ValueError(f"{name} is empty")
            if not _strictly_increasing(grid):
                raise ValueError(f"{name} must be strictly increasing")
        if min(self.p_grid) < 0.0 or max(self.p_grid) > 1.0:
            raise DomainError("p_grid values must lie in [0, 1]")
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")

    @property
    def params(self) -> ModelParams:
        return ModelParams(self.B, self.J, self.g, self.theta, self.phi, self.epsilon)

    @property
    def time_scale(self) -> float:
        return self.J if self.model == "h2" else self.B

    @property
    def has_oracle(self) -> bool:
        return (self.model, self.state) in ORACLE_PAIRS and math.isclose(
            self.theta, math.pi / 2, rel_tol=0.0, abs_tol=1e-15
        )


@dataclass(frozen=True)
class SweepRow:
    model: str
    state: str
    p: float
    theta: float
    phi: float
    B: float
    J: float
    g: float
    scaled_time: float
    numeric: MeasureSet
    analytic: MeasureSet | None = None
    discrepancy: float | None = None


def discrepancy(numeric: MeasureSet, oracle: MeasureSet) -> float:
    return max(abs(getattr(numeric, m) - getattr(oracle, m)) for m in MEASURE_NAMES)


def raw_times(spec: SweepSpec) -> list[float]:
    scale = spec.time_scale
    if scale == 0.0:
        if any(s != 0.0 for s in spec.scaled_time_grid):
            axis = "J" if spec.model == "h2" else "B"
            raise ZeroScaleError(f"{axis} = 0 cannot scale a nonzero time grid")
        return [0.0 for _ in spec.scaled_time_grid]
    return [s / scale for s in spec.scaled_time_grid]


def run_sweep(spec: SweepSpec, form: str = "published") -> list[SweepRow]:
    """Evaluate every (p, scaled time) grid point, p-major then time ascending."""
    _check_form(form)
    times = raw_times(spec)
    params = spec.params
    # epsilon only reaches h3; other builders would warn about it
    if spec.model != "h3" and params.epsilon != 1:
        params = params.with_epsilon(1)
    ev = Evolver(build_h(spec.model, params))
    unitaries = [ev.unitary(t) for t in times]
    make_state = STATES[spec.state]
    rows = []
    for p in spec.p_grid:
        rho = make_state(p)
        for s, u in zip(spec.scaled_time_grid, unitaries):
            sigma = u @ rho @ u.conj().T
            numeric = measure_all(0.5 * (sigma + sigma.conj().T))
            oracle = None
            if spec.has_oracle:
                oracle = analytic(spec.model, spec.state, p, spec.phi, s, form)
            rows.append(
                SweepRow(
                    spec.model, spec.state, p, spec.theta, spec.phi,
                    spec.B, spec.J, spec.g, s, numeric, oracle,
                    None if oracle is None else discrepancy(numeric, oracle),
                )
            )
    return rows


@dataclass
class CompareReport:
    """Per-measure maximum absolute discrepancy and where it occurred.

    ``mode`` is "analytic" (numeric vs closed form) or "h1-equality" (h3
    numerics vs h1 numerics on the same grid).
    """

    model: str
    state: str
    mode: str
    max_discrepancy: dict[str, float]
    worst_point: dict[str, tuple[float, float]]
    time_variation: dict[str, float] | None = None
    notes: list[str] = field(default_factory=list)

    def passed(self, tol: float = 1e-9, time_tol: float = 1e-10) -> bool:
        ok = all(v < tol for v in self.max_discrepancy.values())
        if self.time_variation is not None:
            ok = ok and all(v < time_tol for v in self.time_variation.values())
        return ok


def _max_table(pairs: Iterable[tuple[SweepRow, MeasureSet, MeasureSet]], names):
    worst = {m: 0.0 for m in names}
    where = {m: (math.nan, math.nan) for m in names}
    for row, a, b in pairs:
        for m in names:
            d = abs(getattr(a, m) - getattr(b, m))
            if d > worst[m] or math.isnan(where[m][0]):
                worst[m], where[m] = d, (row.p, row.scaled_time)
    return worst, where


def time_variation(rows: Sequence[SweepRow], names=MEASURE_NAMES) -> dict[str, float]:
    """max over p and t of |m(p, t) - m(p, t0)| for each measure."""
    first: dict[float, MeasureSet] = {}
    out = {m: 0.0 for m in names}
    for r in rows:
        ref = first.setdefault(r.p, r.numeric)
        for m in names:
            out[m] = max(out[m], abs(getattr(r.numeric, m) - getattr(ref, m)))
    return out


def compare_analytic_numeric(spec: SweepSpec, form: str = "published") -> CompareReport:
    if not spec.has_oracle:
        raise NoOracle(
            f"no closed form for model={spec.model!r}, state={spec.state!r}, theta={spec.theta!r}"
        )
    rows = run_sweep(spec, form)
    worst, where = _max_table(((r, r.numeric, r.analytic) for r in rows), MEASURE_NAMES)
    report = CompareReport(spec.model, spec.state, "analytic", worst, where)
    if (spec.model, spec.state) == ("h2", "werner"):
        report.time_variation = time_variation(rows)
    return report


def compare_h3_with_h1(spec: SweepSpec) -> CompareReport:
    """Numeric h3 measures against numeric h1 measures on the same grid and parameters."""
    if spec.model != "h3":
        raise ValueError("compare_h3_with_h1 expects an h3 sweep spec")
    h1_spec = SweepSpec(
        "h1", spec.state, spec.p_grid, spec.scaled_time_grid, spec.phi,
        spec.theta, spec.B, spec.J, spec.g, 1,
    )
    names = MEASURE_NAMES + ("c_r",)
    rows3 = run_sweep(spec)
    rows1 = run_sweep(h1_spec)
    worst, where = _max_table(
        ((r3, r3.numeric, r1.numeric) for r3, r1 in zip(rows3, rows1)), names
    )
    return CompareReport(spec.model, spec.state, "h1-equality", worst, where)
