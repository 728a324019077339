"""Empirical Gram matrices, condition numbers, and the least-squares solve.

The stability of the discrete projection is governed by the smallest
eigenvalue of the Gram matrix ``G_{jk} = (1/n) sum_i L_j(x_i) L_k(x_i)``:
the condition number equals ``lambda_min(G)^(-1/2)``.  Whenever G is close
enough to singular that the eigensolve is meaningless, ``lambda_min`` is
clamped at 1e-13 and the clamp is reported alongside the value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import gram_kahan, moment_kahan
from .errors import ContractError, RankDeficiencyError
from .jacobi import OrthonormalBasis, eval_basis
from .sampling import SampleSet

__all__ = [
    "LAMBDA_MIN_CLAMP",
    "GramMatrix",
    "gram",
    "gram_from_design",
    "min_eigenvalue",
    "condition_number",
    "spectral_distance_to_identity",
    "least_squares_fit",
]

LAMBDA_MIN_CLAMP = 1e-13


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Symmetric (m+1) x (m+1) empirical Gram matrix from n samples."""

    m: int
    n: int
    entries: np.ndarray


def gram_from_design(design: np.ndarray, m: int) -> GramMatrix:
    """Gram matrix from an (n, m+1) matrix of basis values."""
    n = design.shape[0]
    if n < 1:
        raise ContractError("gram matrix needs at least one sample")
    phit = np.ascontiguousarray(design.T)
    return GramMatrix(m=m, n=n, entries=gram_kahan(phit))


def gram(basis: OrthonormalBasis, samples: SampleSet) -> GramMatrix:
    """Assemble G with a fixed ascending-sample, compensated summation."""
    if samples.n < 1:
        raise ContractError("gram matrix needs at least one sample")
    return gram_from_design(eval_basis(basis, samples.points), basis.degree)


def min_eigenvalue(g: GramMatrix) -> tuple[float, bool]:
    """Smallest eigenvalue, clamped from below at 1e-13."""
    lam = float(np.linalg.eigvalsh(g.entries)[0])
    if lam < LAMBDA_MIN_CLAMP:
        return LAMBDA_MIN_CLAMP, True
    return lam, False


def condition_number(basis: OrthonormalBasis, samples: SampleSet) -> tuple[float, bool]:
    """kappa_2 = lambda_min(G)^(-1/2) with the near-singular clamp."""
    lam, clamped = min_eigenvalue(gram(basis, samples))
    return lam ** -0.5, clamped


def spectral_distance_to_identity(g: GramMatrix) -> float:
    """Spectral norm of G - I: the largest |eigenvalue - 1|."""
    eigs = np.linalg.eigvalsh(g.entries)
    return float(np.max(np.abs(eigs - 1.0)))


def least_squares_fit(basis: OrthonormalBasis, samples: SampleSet,
                      values: np.ndarray) -> np.ndarray:
    """Coefficients of the discrete least-squares projection.

    Solves ``G u = b`` with ``b_k = (1/n) sum_i f(x_i) L_k(x_i)`` through the
    symmetric eigendecomposition, clamping eigenvalues below 1e-13 so the
    degenerate regime stays consistent with the condition-number convention.
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (samples.n,):
        raise ContractError("values must match the sample count")
    if np.unique(samples.points).size < basis.degree + 1:
        raise RankDeficiencyError(
            "need at least m+1 distinct sample points for a degree-m fit"
        )
    design = eval_basis(basis, samples.points)
    g = gram_from_design(design, basis.degree)
    b = moment_kahan(np.ascontiguousarray(design.T), values)
    eigvals, eigvecs = np.linalg.eigh(g.entries)
    eigvals = np.maximum(eigvals, LAMBDA_MIN_CLAMP)
    return eigvecs @ ((eigvecs.T @ b) / eigvals)
