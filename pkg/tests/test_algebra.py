import itertools
import math

import numpy as np
import pytest

from ybdyn import algebra as yb
from ybdyn.errors import DegenerateBasis, SingularComposition
from ybdyn.linalg import I4, SWAP, hermiticity_error, unitarity_error

ANGLES = np.linspace(0, 2 * math.pi, 16, endpoint=False)


def U(fam, phi=0.0, eps=1):
    return yb.build_U(yb.TlaGenerator(fam, phi, eps))


def R(fam, theta, phi=0.0, eps=1):
    return yb.build_R(yb.RMatrixSpec(fam, theta, phi, eps))


def test_build_U_examples():
    expected_u1 = np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]])
    assert np.array_equal(U("U1", 0.0), expected_u1)
    expected_u3 = np.array(
        [[1, 0, 0, 1], [0, 1, 1j, 0], [0, -1j, 1, 0], [1, 0, 0, 1]]
    ) / math.sqrt(2)
    assert np.allclose(U("U3", 0.0, 1), expected_u3, atol=1e-16)
    assert np.trace(U("U1", 0.4)).real == 2.0


@pytest.mark.parametrize("fam", yb.TLA_FAMILIES)
def test_U_exactly_hermitian(fam):
    for phi, eps in itertools.product(ANGLES, (1, -1)):
        assert hermiticity_error(U(fam, phi, eps)) == 0.0


def test_loop_values():
    assert yb.TlaGenerator("U1").loop_d == 2
    assert yb.TlaGenerator("U3").loop_d == pytest.approx(math.sqrt(2))


def test_invalid_specs():
    with pytest.raises(ValueError):
        yb.TlaGenerator("U9")
    with pytest.raises(ValueError):
        yb.RMatrixSpec("R3", 0.1, epsilon=0)


@pytest.mark.parametrize(
    "fam,phi,eps",
    [("U1", math.pi / 4, 1), ("U2", 0.3, 1), ("U3", 1.0, -1), ("U3", 2.2, 1)],
)
def test_check_tla_three_sites(fam, phi, eps):
    res = yb.check_tla(fam, phi, eps, sites=3)
    assert res.braid < 1e-12
    assert res.idempotent < 1e-12
    assert res.far_commutation is None


@pytest.mark.parametrize("fam", yb.TLA_FAMILIES)
def test_check_tla_far_commutation_exact(fam):
    assert yb.check_tla(fam, 0.7, 1, sites=4).far_commutation == 0.0


def test_check_tla_sites_validated():
    with pytest.raises(ValueError):
        yb.check_tla("U1", sites=5)


def test_embed_positions():
    op = np.arange(16).reshape(4, 4).astype(complex)
    assert np.array_equal(yb.embed(op, 1, 3), np.kron(op, np.eye(2)))
    assert np.array_equal(yb.embed(op, 2, 3), np.kron(np.eye(2), op))
    with pytest.raises(ValueError):
        yb.embed(op, 3, 3)


def test_build_R_theta_zero():
    for phi in ANGLES:
        assert np.allclose(R("R1", 0.0, phi), I4, atol=0)
        assert np.allclose(R("R2", 0.0, phi), I4, atol=0)
        assert np.allclose(R("R3", 0.0, phi), -I4, atol=0)


def test_build_R1_block_hand_evaluation():
    th, phi = math.pi / 2, math.pi / 4
    r = R("R1", th, phi)
    e = np.exp(1j * phi)
    block = math.cos(th / 2) * np.eye(2) - 1j * math.sin(th / 2) * np.array(
        [[0, e], [e.conjugate(), 0]]
    )
    idx = np.ix_((0, 3), (0, 3))
    assert np.allclose(r[idx], block, atol=1e-15)
    # {01, 10} block: S1z S2z = -1/4, so the identity coefficient becomes exp(i theta / 2)
    assert np.allclose(r[np.ix_((1, 2), (1, 2))], np.exp(1j * th / 2) * np.eye(2), atol=1e-15)


@pytest.mark.parametrize("fam,eps", [("R1", 1), ("R2", 1), ("R3", 1), ("R3", -1)])
def test_R_unitary_on_grid(fam, eps):
    for th, phi in itertools.product(ANGLES, ANGLES):
        assert unitarity_error(R(fam, th, phi, eps)) < 1e-12


def test_constant_ybe():
    assert yb.check_constant_ybe(I4) == 0.0
    assert yb.check_constant_ybe(SWAP) == 0.0
    # generic R1 does not satisfy the braid relation; value measured at theta=pi/2, phi=0
    assert yb.check_constant_ybe(R("R1", math.pi / 2)) == pytest.approx(math.sqrt(2) / 4, abs=1e-12)


def test_theta_of_mu():
    assert yb.theta_of_mu("R1", 0.0) == 0.0
    assert yb.theta_of_mu("R1", 1.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert yb.theta_of_mu("R3", 0.0) == 0.0
    mus = np.linspace(0, 20, 401)
    for fam in ("R1", "R3"):
        th = [yb.theta_of_mu(fam, m) for m in mus]
        assert np.all(np.diff(th) >= 0)
        assert 0 <= min(th) and max(th) <= math.pi
    with pytest.raises(ValueError):
        yb.theta_of_mu("R4", 1.0)


@pytest.mark.parametrize("fam", yb.R_FAMILIES)
def test_spectral_ybe_zero_parameters(fam):
    for rule in ("additive", "rational"):
        assert yb.check_spectral_ybe(fam, yb.SpectralParams(0.0, 0.0, 1.0), rule) < 1e-15


@pytest.mark.parametrize("eps", (1, -1))
def test_spectral_ybe_R3_additive(eps):
    grid = (0.3, 0.7, 1.1)
    for mu, nu in itertools.product(grid, grid):
        assert yb.check_spectral_ybe("R3", yb.SpectralParams(mu, nu), "additive", 0.0, eps) < 1e-10


def test_rational_scan_reports_residuals():
    scan = yb.scan_beta_squared("R1")
    assert set(scan) == {-1.0, 1.0}
    assert all(np.isfinite(v) and v >= 0 for v in scan.values())


def test_singular_composition():
    with pytest.raises(SingularComposition):
        yb.check_spectral_ybe("R1", yb.SpectralParams(1.0, 1.0, -1.0), "rational")


def test_decompose_R():
    a, b, res = yb.decompose_R(I4, U("U1", 0.3))
    assert a == pytest.approx(1) and b == pytest.approx(0, abs=1e-15) and res < 1e-15
    for th in (0.3, math.pi / 2, 2.0):
        assert yb.decompose_R(R("R1", th, 0.6), U("U1", 0.6))[2] < 1e-12
    assert yb.decompose_R(R("R2", math.pi / 2, 0.6), U("U1", 0.6))[2] > 0.1
    with pytest.raises(DegenerateBasis):
        yb.decompose_R(I4, 3 * I4)


def test_decompose_R1_coefficients():
    th, phi = 1.3, 0.2
    a, b, _ = yb.decompose_R(R("R1", th, phi), U("U1", phi))
    assert a == pytest.approx(np.exp(1j * th / 2))
    assert b == pytest.approx(-1j * math.sin(th / 2))
