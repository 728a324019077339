"""Tests for Gram matrices, condition numbers, and the least-squares solve."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from lsq_stability import (
    ContractError,
    RankDeficiencyError,
    b_exact,
    christoffel_k,
    condition_number,
    gram,
    least_squares_fit,
    make_params,
    min_eigenvalue,
    orthonormal_basis,
    sample_iid,
    sort_samples,
    spectral_distance_to_identity,
)
from lsq_stability.conditioning import LAMBDA_MIN_CLAMP
from lsq_stability.sampling import SampleSet

UNIFORM = make_params(0, 0)


def pts(*values):
    arr = np.array(values, dtype=float)
    nondecreasing = bool((arr[1:] >= arr[:-1]).all()) if arr.size else True
    return SampleSet(points=arr, provenance="iid", sorted=nondecreasing)


class TestGram:
    def test_two_endpoints(self):
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-1, 1))
        assert_allclose(g.entries, [[1, 0], [0, 3]], atol=1e-14)

    def test_three_points(self):
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-1, 0, 1))
        assert_allclose(g.entries, [[1, 0], [0, 2]], atol=1e-14)

    def test_degree_zero(self):
        g = gram(orthonormal_basis(make_params(1, -0.5), 0), pts(0.3, -0.7, 0.1))
        assert_allclose(g.entries, [[1.0]])

    def test_empty_rejected(self):
        with pytest.raises(ContractError):
            gram(orthonormal_basis(UNIFORM, 1), pts())

    def test_exactly_symmetric_and_psd(self):
        basis = orthonormal_basis(make_params(0.5, -0.25), 8)
        s = sample_iid(make_params(0.5, -0.25), 40, 5)
        g = gram(basis, s)
        assert (g.entries == g.entries.T).all()
        assert np.linalg.eigvalsh(g.entries)[0] > -1e-10
        assert abs(g.entries[0, 0] - 1.0) < 1e-12


class TestMinEigenvalue:
    def test_diagonal_cases(self):
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-1, 1))
        assert min_eigenvalue(g) == (1.0, False)
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-0.5, 0.5))
        lam, clamped = min_eigenvalue(g)
        assert_allclose(lam, 0.75)
        assert not clamped

    def test_rank_deficient_clamps(self):
        # two points cannot support a quadratic: lambda_min ~ 0 -> clamp
        g = gram(orthonormal_basis(UNIFORM, 2), pts(-1, 1))
        assert min_eigenvalue(g) == (LAMBDA_MIN_CLAMP, True)


class TestConditionNumber:
    def test_unit(self):
        kappa, clamped = condition_number(orthonormal_basis(UNIFORM, 1), pts(-1, 1))
        assert_allclose(kappa, 1.0)
        assert not clamped

    def test_interior_pair(self):
        kappa, _ = condition_number(orthonormal_basis(UNIFORM, 1), pts(-0.5, 0.5))
        assert_allclose(kappa, 2 / np.sqrt(3), rtol=1e-12)

    def test_degree_zero(self):
        kappa, _ = condition_number(orthonormal_basis(make_params(2, 0.5), 0), pts(0.1))
        assert_allclose(kappa, 1.0)

    def test_at_least_one(self):
        # lambda_min <= G_00 = 1 forces kappa >= 1
        for seed in range(5):
            s = sample_iid(UNIFORM, 30, seed)
            kappa, _ = condition_number(orthonormal_basis(UNIFORM, 6), s)
            assert kappa >= 1.0 - 1e-8


class TestSpectralDistance:
    def test_identity(self):
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-1, 1))
        g2 = gram(orthonormal_basis(UNIFORM, 0), pts(0.0))
        assert spectral_distance_to_identity(g2) == 0.0
        assert_allclose(spectral_distance_to_identity(g), 2.0)

    def test_diag_three_quarters(self):
        g = gram(orthonormal_basis(UNIFORM, 1), pts(-0.5, 0.5))
        assert_allclose(spectral_distance_to_identity(g), 0.25)

    def test_half_distance_implies_sqrt2(self):
        for seed in range(40):
            s = sample_iid(UNIFORM, 200, seed)
            basis = orthonormal_basis(UNIFORM, 5)
            g = gram(basis, s)
            if spectral_distance_to_identity(g) <= 0.5:
                kappa, _ = condition_number(basis, s)
                assert kappa <= np.sqrt(2.0) + 1e-9


class TestLeastSquares:
    def test_constant_reproduced(self):
        basis = orthonormal_basis(make_params(0.5, -0.25), 3)
        s = pts(-0.9, -0.3, 0.2, 0.6, 0.9)
        u = least_squares_fit(basis, s, np.full(5, 5.0))
        assert_allclose(u, [5, 0, 0, 0], atol=1e-12)

    def test_linear_example(self):
        basis = orthonormal_basis(UNIFORM, 1)
        s = pts(-1, 0, 1)
        u = least_squares_fit(basis, s, np.sqrt(3.0) * s.points)
        assert_allclose(u, [0, 1], atol=1e-12)

    def test_projection_identity(self):
        # a polynomial of fitting degree is recovered exactly at the samples
        rng = np.random.default_rng(11)
        basis = orthonormal_basis(UNIFORM, 4)
        s = sort_samples(sample_iid(UNIFORM, 30, 17))
        coef = rng.standard_normal(5)
        from lsq_stability import eval_basis

        values = eval_basis(basis, s.points) @ coef
        u = least_squares_fit(basis, s, values)
        fitted = eval_basis(basis, s.points) @ u
        assert np.abs(fitted - values).max() < 1e-9

    def test_rank_deficiency_error(self):
        basis = orthonormal_basis(UNIFORM, 2)
        with pytest.raises(RankDeficiencyError):
            least_squares_fit(basis, pts(0.1, 0.1, 0.1), np.zeros(3))

    def test_value_shape_checked(self):
        basis = orthonormal_basis(UNIFORM, 1)
        with pytest.raises(ContractError):
            least_squares_fit(basis, pts(-1, 1), np.zeros(3))


class TestRayleighIdentity:
    def test_eigenvector_attains_kappa(self):
        for seed in range(20):
            p = make_params(*[(0, 0), (0.5, 0.5), (-0.25, -0.25)][seed % 3])
            basis = orthonormal_basis(p, 6)
            s = sample_iid(p, 25, seed)
            g = gram(basis, s)
            lam, clamped = min_eigenvalue(g)
            if clamped:
                continue
            kappa, _ = condition_number(basis, s)
            _, vecs = np.linalg.eigh(g.entries)
            v = vecs[:, 0]
            rayleigh = np.sqrt((v @ v) / (v @ g.entries @ v))
            assert_allclose(rayleigh, kappa, rtol=1e-8)

    def test_random_vectors_never_exceed(self):
        rng = np.random.default_rng(3)
        basis = orthonormal_basis(UNIFORM, 5)
        s = sample_iid(UNIFORM, 40, 8)
        g = gram(basis, s)
        kappa, _ = condition_number(basis, s)
        w = rng.standard_normal((1000, 6))
        ratios = np.sqrt(np.sum(w * w, axis=1) / np.einsum("ij,jk,ik->i", w, g.entries, w))
        assert (ratios <= kappa * (1 + 1e-9)).all()


class TestNormSandwich:
    def test_lebesgue_sandwich(self):
        # B/sqrt(K(m+1)) <= kappa <= sqrt(n) B on unclamped instances
        rng = np.random.default_rng(21)
        for _ in range(12):
            m = int(rng.integers(1, 9))
            n = int(rng.integers(m + 2, 25))
            p = make_params(0, 0)
            basis = orthonormal_basis(p, m)
            s = sort_samples(sample_iid(p, n, int(rng.integers(0, 2**31))))
            kappa, clamped = condition_number(basis, s)
            if clamped:
                continue
            b = b_exact(s, m, max(256, 8 * m))
            k = christoffel_k(basis)
            assert b / np.sqrt(k) <= kappa * (1 + 1e-9)
            assert kappa <= np.sqrt(n) * b * (1 + 1e-9)
