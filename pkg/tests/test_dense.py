"""Tests for the dense kernels: eigensolver, quadrature, simplex."""

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.optimize import linprog

from lsq_stability import (
    ContractError,
    LPProblem,
    gauss_jacobi_nodes,
    lp_maximize,
    make_params,
    symmetric_eigen,
)

mpmath.mp.dps = 60


class TestSymmetricEigen:
    def test_two_by_two(self):
        vals, vecs = symmetric_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
        assert_allclose(vals, [1.0, 3.0], atol=1e-12)
        assert_allclose(vecs.T @ vecs, np.eye(2), atol=1e-12)

    def test_identity(self):
        vals, _ = symmetric_eigen(np.eye(5))
        assert_allclose(vals, np.ones(5))

    def test_zero(self):
        vals, _ = symmetric_eigen(np.zeros((3, 3)))
        assert_allclose(vals, np.zeros(3))

    def test_rejects_asymmetry(self):
        with pytest.raises(ContractError):
            symmetric_eigen(np.array([[1.0, 2.0], [0.0, 1.0]]))

    @pytest.mark.parametrize("order", [3, 12, 37, 60])
    def test_residual_and_orthogonality(self, order):
        rng = np.random.default_rng(order)
        a = rng.standard_normal((order, order))
        a = 0.5 * (a + a.T)
        tol = 1e-12
        vals, vecs = symmetric_eigen(a, tol)
        norm = np.linalg.norm(a)
        assert np.linalg.norm(a @ vecs - vecs * vals) <= 10 * tol * norm + 1e-13
        assert np.abs(vecs.T @ vecs - np.eye(order)).max() < 1e-10
        assert (np.diff(vals) >= -1e-14).all()

    def test_agrees_with_lapack(self):
        rng = np.random.default_rng(8)
        a = rng.standard_normal((25, 25))
        a = a @ a.T
        vals, _ = symmetric_eigen(a)
        assert_allclose(vals, np.linalg.eigvalsh(a), rtol=1e-10, atol=1e-10)


def _moment_oracle(alpha, beta, degree):
    """Normalized moment of x^degree under the Jacobi measure, high precision."""
    a = mpmath.mpf(alpha)
    b = mpmath.mpf(beta)
    total = mpmath.mpf(0)
    for j in range(degree + 1):
        total += (
            mpmath.binomial(degree, j)
            * (-1) ** (degree - j)
            * mpmath.mpf(2) ** j
            * mpmath.beta(b + j + 1, a + 1)
        )
    return float(total / mpmath.beta(b + 1, a + 1))


class TestGaussJacobi:
    def test_uniform_one_point(self):
        nodes, w = gauss_jacobi_nodes(make_params(0, 0), 1)
        assert_allclose(nodes, [0.0], atol=1e-15)
        assert_allclose(w, [1.0])

    def test_uniform_two_point(self):
        nodes, w = gauss_jacobi_nodes(make_params(0, 0), 2)
        assert_allclose(nodes, [-1 / np.sqrt(3), 1 / np.sqrt(3)], rtol=1e-14)
        assert_allclose(w, [0.5, 0.5])

    def test_chebyshev_two_point(self):
        nodes, w = gauss_jacobi_nodes(make_params(-0.5, -0.5), 2)
        assert_allclose(nodes, [-np.sqrt(2) / 2, np.sqrt(2) / 2], rtol=1e-14)
        assert_allclose(w, [0.5, 0.5])

    def test_weights_sum_to_one(self):
        nodes, w = gauss_jacobi_nodes(make_params(2.0, -0.9), 17)
        assert_allclose(w.sum(), 1.0, rtol=1e-14)
        assert (np.abs(nodes) < 1.0).all()

    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (-0.5, 0.5), (1.5, -0.25)])
    @pytest.mark.parametrize("k", [1, 5, 40])
    def test_moment_exactness(self, alpha, beta, k):
        # rule of order k integrates monomials up to degree 2k-1 exactly
        p = make_params(alpha, beta)
        nodes, w = gauss_jacobi_nodes(p, k)
        for degree in range(2 * k):
            got = float((w * nodes**degree).sum())
            want = _moment_oracle(alpha, beta, degree)
            assert abs(got - want) <= 1e-11 * max(1.0, abs(want))


class TestSimplex:
    def test_bounded_interval(self):
        res = lp_maximize(LPProblem(np.array([1.0]), np.array([[1.0], [-1.0]]),
                                    np.array([1.0, 1.0])))
        assert res.status == "optimal"
        assert_allclose(res.value, 1.0)

    def test_box(self):
        res = lp_maximize(LPProblem(
            np.array([1.0, 1.0]),
            np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]),
            np.array([1.0, 2.0, 0.0, 0.0]),
        ))
        assert res.status == "optimal"
        assert_allclose(res.value, 3.0)
        assert_allclose(res.argmax, [1.0, 2.0])

    def test_unbounded(self):
        res = lp_maximize(LPProblem(np.array([1.0]), np.array([[-1.0]]), np.array([0.0])))
        assert res.status == "unbounded"

    def test_infeasible(self):
        res = lp_maximize(LPProblem(np.array([1.0]), np.array([[1.0], [-1.0]]),
                                    np.array([0.0, -1.0])))
        assert res.status == "infeasible"

    def test_negative_bounds_feasible(self):
        # x <= 3, -x <= -2 means x in [2, 3]
        res = lp_maximize(LPProblem(np.array([-1.0]), np.array([[1.0], [-1.0]]),
                                    np.array([3.0, -2.0])))
        assert res.status == "optimal"
        assert_allclose(res.value, -2.0)

    def test_duality_certificate(self):
        # gap c.z - b.y vanishes and y is a feasible dual certificate
        rng = np.random.default_rng(5)
        for _ in range(25):
            d = int(rng.integers(1, 6))
            nc = int(rng.integers(d + 1, 12))
            a = rng.standard_normal((nc, d))
            a = np.vstack((a, np.eye(d), -np.eye(d)))  # keep it bounded
            b = rng.uniform(0.5, 2.0, a.shape[0])
            c = rng.standard_normal(d)
            res = lp_maximize(LPProblem(c, a, b))
            assert res.status == "optimal"
            y = res.dual
            assert (y >= -1e-9).all()
            assert np.abs(a.T @ y - c).max() < 1e-8
            assert abs(c @ res.argmax - b @ y) < 1e-8

    def test_matches_scipy(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            d = int(rng.integers(1, 5))
            nc = int(rng.integers(d + 1, 10))
            a = np.vstack((rng.standard_normal((nc, d)), np.eye(d), -np.eye(d)))
            b = rng.uniform(0.2, 3.0, a.shape[0])
            c = rng.standard_normal(d)
            res = lp_maximize(LPProblem(c, a, b))
            ref = linprog(-c, A_ub=a, b_ub=b, bounds=[(None, None)] * d)
            assert res.status == "optimal" and ref.status == 0
            assert_allclose(res.value, -ref.fun, rtol=1e-8, atol=1e-8)

    def test_matches_scipy_negative_bounds(self):
        # feasible instances with negative bounds exercise phase 1 and the
        # artificial drive-out
        rng = np.random.default_rng(13)
        for _ in range(25):
            d = int(rng.integers(1, 5))
            nc = int(rng.integers(d + 1, 10))
            a = np.vstack((rng.standard_normal((nc, d)), np.eye(d), -np.eye(d)))
            x0 = rng.standard_normal(d)  # guaranteed-feasible anchor
            b = a @ x0 + rng.uniform(0.0, 1.0, a.shape[0])
            c = rng.standard_normal(d)
            res = lp_maximize(LPProblem(c, a, b))
            ref = linprog(-c, A_ub=a, b_ub=b, bounds=[(None, None)] * d)
            assert res.status == "optimal" and ref.status == 0
            assert (a @ res.argmax <= b + 1e-7).all()
            assert_allclose(res.value, -ref.fun, rtol=1e-7, atol=1e-7)
