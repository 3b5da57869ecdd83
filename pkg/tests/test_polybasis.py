import numpy as np
import pytest
from numpy.polynomial import chebyshev as npcheb
from numpy.polynomial import legendre as npleg

from weilfit.indexsets import build_index_set
from weilfit.pointgen import weil_grid
from weilfit.polybasis import (CHEBYSHEV_CLASSICAL, CHEBYSHEV_ORTHONORMAL,
                               LEGENDRE_ORTHONORMAL, BasisSpec, basis_matrix,
                               eval_1d, eval_tensor)


def test_basis_spec_validation():
    assert BasisSpec("chebyshev", "classical").family == "chebyshev"
    with pytest.raises(ValueError):
        BasisSpec("hermite", "classical")
    with pytest.raises(ValueError):
        BasisSpec("chebyshev", "monic")
    with pytest.raises(ValueError):
        BasisSpec("legendre", "classical")  # not offered: unnormalized P_n


# ---------------------------------------------------------------------------
# univariate values

def test_eval_1d_chebyshev_closed_forms():
    y = np.array([-1.0, -0.3, 0.0, 0.5, 1.0])
    assert np.array_equal(eval_1d("chebyshev", "classical", 0, y), np.ones(5))
    np.testing.assert_allclose(eval_1d("chebyshev", "classical", 1, y), y,
                               rtol=0, atol=1e-15)
    # T_2 = 2y^2 - 1, T_3 = 4y^3 - 3y
    np.testing.assert_allclose(eval_1d("chebyshev", "classical", 2, y),
                               2 * y**2 - 1, rtol=0, atol=1e-14)
    np.testing.assert_allclose(eval_1d("chebyshev", "classical", 3, y),
                               4 * y**3 - 3 * y, rtol=0, atol=1e-14)
    assert abs(eval_1d("chebyshev", "classical", 3, np.array([0.5]))[0] - (-1.0)) < 1e-15


def test_eval_1d_chebyshev_orthonormal_scaling():
    y = np.linspace(-1, 1, 11)
    t0 = eval_1d("chebyshev", "orthonormal", 0, y)
    assert np.array_equal(t0, np.ones(11))
    for n in (1, 2, 5):
        np.testing.assert_allclose(
            eval_1d("chebyshev", "orthonormal", n, y),
            np.sqrt(2) * eval_1d("chebyshev", "classical", n, y),
            rtol=0, atol=1e-14)


def test_eval_1d_chebyshev_against_numpy():
    y = np.linspace(-1, 1, 33)
    for n in range(9):
        coef = np.zeros(n + 1)
        coef[n] = 1.0
        np.testing.assert_allclose(eval_1d("chebyshev", "classical", n, y),
                                   npcheb.chebval(y, coef), rtol=0, atol=1e-13)


def test_eval_1d_legendre_against_numpy():
    y = np.linspace(-1, 1, 33)
    for n in range(9):
        coef = np.zeros(n + 1)
        coef[n] = 1.0
        np.testing.assert_allclose(
            eval_1d("legendre", "orthonormal", n, y),
            np.sqrt(2 * n + 1) * npleg.legval(y, coef),
            rtol=0, atol=1e-13)


def test_eval_1d_legendre_spot_value():
    # P_2(1/2) = (3/4 - 1)/2 = -1/8, orthonormal scale sqrt(5)
    v = eval_1d("legendre", "orthonormal", 2, np.array([0.5]))[0]
    assert abs(v - np.sqrt(5) * (-0.125)) < 1e-15


def test_eval_1d_domain_check():
    with pytest.raises(ValueError):
        eval_1d("chebyshev", "classical", 2, np.array([1.0000001]))
    with pytest.raises(ValueError):
        eval_1d("legendre", "orthonormal", 2, np.array([-2.0]))
    with pytest.raises(ValueError):
        eval_1d("chebyshev", "classical", -1, np.array([0.0]))


# ---------------------------------------------------------------------------
# tensor products

def test_eval_tensor_is_product_of_factors():
    pts = np.array([[0.3, -0.7], [0.0, 1.0], [-1.0, 0.25]])
    n = (2, 3)
    for spec in (CHEBYSHEV_CLASSICAL, CHEBYSHEV_ORTHONORMAL, LEGENDRE_ORTHONORMAL):
        got = eval_tensor(spec, n, pts)
        want = (eval_1d(spec.family, spec.normalization, 2, pts[:, 0])
                * eval_1d(spec.family, spec.normalization, 3, pts[:, 1]))
        assert np.array_equal(got, want)


def test_eval_tensor_single_point():
    # a single length-d tuple is one point, not d points
    v = eval_tensor(CHEBYSHEV_CLASSICAL, (1, 1), (0.5, 0.25))
    assert isinstance(v, float)
    assert abs(v - 0.5 * 0.25) < 1e-15


def test_eval_tensor_zero_index_is_one():
    pts = np.array([[0.1, 0.2, 0.3]])
    for spec in (CHEBYSHEV_CLASSICAL, LEGENDRE_ORTHONORMAL):
        assert eval_tensor(spec, (0, 0, 0), pts)[0] == 1.0


def test_eval_tensor_dimension_mismatch():
    with pytest.raises(ValueError):
        eval_tensor(CHEBYSHEV_CLASSICAL, (1, 2), np.zeros((4, 3)))


# ---------------------------------------------------------------------------
# design matrices

def test_basis_matrix_columns_match_eval_tensor():
    idx = build_index_set("TD", 3, 2)
    pts = weil_grid(31, 2).points
    for spec in (CHEBYSHEV_CLASSICAL, CHEBYSHEV_ORTHONORMAL, LEGENDRE_ORTHONORMAL):
        D = basis_matrix(spec, idx, pts)
        assert D.shape == (16, len(idx))
        for k, n in enumerate(idx):
            assert np.array_equal(D[:, k], eval_tensor(spec, n, pts))


def test_basis_matrix_first_column_constant():
    idx = build_index_set("TP", 2, 3)
    pts = weil_grid(53, 3).points
    D = basis_matrix(CHEBYSHEV_ORTHONORMAL, idx, pts)
    assert np.all(D[:, 0] == 1.0)


def test_basis_matrix_accepts_plain_index_list():
    pts = np.array([[0.5], [-0.25]])
    D = basis_matrix(CHEBYSHEV_CLASSICAL, [(0,), (1,), (2,)], pts)
    np.testing.assert_allclose(D, [[1, 0.5, -0.5], [1, -0.25, -0.875]],
                               rtol=0, atol=1e-15)


# ---------------------------------------------------------------------------
# orthonormality oracles (quadrature, independent of the fitting code)

def test_chebyshev_orthonormal_under_arcsine_measure():
    L = 64
    nodes = np.cos((2 * np.arange(1, L + 1) - 1) * np.pi / (2 * L))
    idx = build_index_set("TD", 4, 1)
    D = basis_matrix(CHEBYSHEV_ORTHONORMAL, idx, nodes[:, None])
    G = D.T @ D / L
    np.testing.assert_allclose(G, np.eye(len(idx)), rtol=0, atol=1e-13)


def test_legendre_orthonormal_under_uniform_measure():
    nodes, wts = np.polynomial.legendre.leggauss(32)
    idx = build_index_set("TD", 4, 1)
    D = basis_matrix(LEGENDRE_ORTHONORMAL, idx, nodes[:, None])
    G = (D * wts[:, None]).T @ D / 2.0  # uniform density on [-1,1] is 1/2
    np.testing.assert_allclose(G, np.eye(len(idx)), rtol=0, atol=1e-13)


def test_tensor_orthonormality_2d():
    L = 24
    nodes = np.cos((2 * np.arange(1, L + 1) - 1) * np.pi / (2 * L))
    xx, yy = np.meshgrid(nodes, nodes, indexing="ij")
    pts = np.column_stack([xx.ravel(), yy.ravel()])
    idx = build_index_set("TD", 3, 2)
    D = basis_matrix(CHEBYSHEV_ORTHONORMAL, idx, pts)
    G = D.T @ D / pts.shape[0]
    np.testing.assert_allclose(G, np.eye(len(idx)), rtol=0, atol=1e-12)
