import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybdyn import measures as M
from ybdyn.errors import DomainError, InvalidDensity, NotNormalized, NotXState
from ybdyn.linalg import binary_entropy
from ybdyn.states import bell_state, projector, werner_state, xlike_state

from conftest import random_density, random_pure, random_unitary, random_x_state

BELL = projector(bell_state(0, 0))
MIXED = np.eye(4) / 4
P_GRID = np.linspace(0, 1, 101)


def lambdas_nonhermitian(rho):
    """Independent route: square roots of the eigenvalues of rho * rho_tilde."""
    w = np.linalg.eigvals(rho @ M.spin_flip(rho))
    return np.sort(np.sqrt(np.abs(w.real)))[::-1]


def test_concurrence_general_examples():
    assert M.concurrence_general(BELL) == pytest.approx(1.0, abs=1e-12)
    assert M.concurrence_general(MIXED) == 0.0
    assert M.concurrence_general(werner_state(0.8)) == pytest.approx(0.7, abs=1e-12)
    for p in P_GRID:
        assert M.concurrence_general(werner_state(p)) == pytest.approx(max(0, (3 * p - 1) / 2), abs=1e-12)


def test_wootters_lambdas_match_nonhermitian_route(rng):
    for _ in range(300):
        rho = random_density(rng)
        assert np.allclose(M.wootters_lambdas(rho), lambdas_nonhermitian(rho), atol=1e-8)


def test_concurrence_x_examples():
    assert M.concurrence_x(werner_state(1)) == pytest.approx(1.0)
    assert M.concurrence_x(werner_state(1 / 3)) == pytest.approx(0.0, abs=1e-15)
    assert M.concurrence_x(xlike_state(0)) == pytest.approx(0.0, abs=1e-15)
    rho = np.eye(4) / 4 + 0j
    rho[0, 1] = rho[1, 0] = 0.05
    with pytest.raises(NotXState):
        M.concurrence_x(rho)


def test_concurrence_pure_examples():
    assert M.concurrence_pure(bell_state(0, 0)) == pytest.approx(1.0)
    assert M.concurrence_pure([1, 0, 0, 0]) == 0.0
    assert M.concurrence_pure(np.ones(4) / 2) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(NotNormalized):
        M.concurrence_pure([1, 1, 0, 0])


def test_concurrence_pure_matches_general(rng):
    for _ in range(1000):
        psi = random_pure(rng)
        assert M.concurrence_pure(psi) == pytest.approx(M.concurrence_general(projector(psi)), abs=1e-10)


def test_concurrence_local_unitary_invariance(rng):
    for _ in range(1000):
        rho = random_density(rng, rank=rng.integers(1, 5))
        u = np.kron(random_unitary(rng), random_unitary(rng))
        moved = u @ rho @ u.conj().T
        assert abs(M.concurrence_general(moved) - M.concurrence_general(rho)) < 1e-10


def test_x_fast_paths_match_general(rng):
    states = [random_x_state(rng) for _ in range(500)]
    states += [werner_state(p) for p in P_GRID] + [xlike_state(p) for p in P_GRID]
    for rho in states:
        assert abs(M.concurrence_x(rho) - M.concurrence_general(rho)) < 1e-8
        assert abs(M.mid_x(rho) - M.mid_general(rho)) < 1e-8


def test_eof_examples():
    assert M.eof(0) == 0.0
    assert M.eof(1) == 1.0
    # mpmath, 30 digits: 0.354578902665269...
    assert M.eof(0.5) == pytest.approx(0.35460, abs=1e-4)
    assert M.eof(0.5) == pytest.approx(0.354578902665270, abs=1e-14)
    with pytest.raises(DomainError):
        M.eof(1.5)


def test_eof_monotone():
    values = [M.eof(c) for c in np.linspace(0, 1, 1001)]
    assert np.all(np.diff(values) >= 0)


def test_l1_coherence():
    assert M.l1_coherence(MIXED) == 0.0
    for p in P_GRID:
        assert M.l1_coherence(werner_state(p)) == pytest.approx(p, abs=1e-15)
        expected = 2 * (abs(1 - p) / 4 + abs(1 - 3 * p) / 4)
        assert M.l1_coherence(xlike_state(p)) == pytest.approx(expected, abs=1e-15)
    assert M.l1_coherence(xlike_state(0)) == pytest.approx(1.0)


def test_rel_entropy_coherence():
    assert M.rel_entropy_coherence(np.diag([0.1, 0.2, 0.3, 0.4])) == pytest.approx(0, abs=1e-15)
    assert M.rel_entropy_coherence(BELL) == pytest.approx(1.0, abs=1e-12)
    # eigenvalues of Werner(p): (1+3p)/4 once, (1-p)/4 three times; mpmath: 0.262483183763734...
    assert M.rel_entropy_coherence(werner_state(0.5)) == pytest.approx(0.262483183763734, abs=1e-12)


def test_mutual_information(rng):
    a, b = random_density(rng, 2), random_density(rng, 2)
    assert M.mutual_information(np.kron(a, b)) == pytest.approx(0, abs=1e-12)
    assert M.mutual_information(BELL) == pytest.approx(2, abs=1e-12)
    assert M.mutual_information(MIXED) == pytest.approx(0, abs=1e-12)


def test_mid_general_examples(rng):
    a, b = random_pure(rng, 2), random_pure(rng, 2)
    assert M.mid_general(projector(np.kron(a, b))) == pytest.approx(0, abs=1e-10)
    assert M.mid_general(BELL) == pytest.approx(1, abs=1e-12)
    for p in P_GRID:
        assert abs(M.mid_general(werner_state(p)) - M.mid_x(werner_state(p))) < 1e-10


def test_mid_general_product_mixed(rng):
    # product of mixed states with non-degenerate marginals: eigenbasis measurement is harmless
    a, b = random_density(rng, 2), random_density(rng, 2)
    assert M.mid_general(np.kron(a, b)) == pytest.approx(0, abs=1e-10)


def test_mid_x_examples():
    assert M.mid_x(werner_state(1)) == pytest.approx(1.0, abs=1e-12)
    assert M.mid_x(werner_state(0)) == 0.0
    assert M.mid_x(xlike_state(1)) == pytest.approx(1.0, abs=1e-12)


def test_measure_all_examples():
    z = M.measure_all(MIXED)
    assert all(v == pytest.approx(0, abs=1e-15) for v in z.as_dict().values())
    b = M.measure_all(BELL)
    for v in b.as_dict().values():
        assert v == pytest.approx(1, abs=1e-12)
    w = M.measure_all(werner_state(0.5))
    assert w.concurrence == pytest.approx(0.25)
    assert w.eof == pytest.approx(M.eof(0.25))
    assert w.c_l1 == pytest.approx(0.5)
    # closed form at p = 1/2: (1/4)[(1-p)log(1-p) + (1+3p)log(1+3p) - 2(1+p)log(1+p)]
    assert w.mid == pytest.approx(0.262483183763734, abs=1e-12)


def test_measure_all_general_path(rng):
    rho = random_density(rng)
    m = M.measure_all(rho)
    assert m.concurrence == M.concurrence_general(rho)
    assert m.mid == M.mid_general(rho)
    assert m.eof == pytest.approx(binary_entropy((1 + math.sqrt(1 - m.concurrence**2)) / 2))


def test_coherence_inequality_random(rng):
    for _ in range(500):
        m = M.measure_all(random_density(rng, rank=rng.integers(1, 5)))
        assert m.c_l1 >= m.c_r / 2 - 1e-12


def test_invalid_density_rejected():
    for fn in (M.concurrence_general, M.l1_coherence, M.rel_entropy_coherence, M.mid_general, M.measure_all):
        with pytest.raises(InvalidDensity):
            fn(np.diag([0.7, 0.7, 0, 0]))


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 1), st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
def test_x_state_family_measures_in_range(p, a, b):
    # Werner state dressed by a local diagonal phase stays an X state
    u = np.kron(np.diag([1, np.exp(1j * a)]), np.diag([1, np.exp(1j * b)]))
    rho = u @ werner_state(p) @ u.conj().T
    m = M.measure_all(rho)
    assert 0 <= m.concurrence <= 1 and 0 <= m.eof <= 1
    assert m.c_l1 == pytest.approx(p, abs=1e-12)
    assert m.concurrence == pytest.approx(max(0, (3 * p - 1) / 2), abs=1e-12)
