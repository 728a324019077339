"""Jacobi probability weights and their orthonormal polynomial bases.

The weight on [-1, 1] is ``w(x) = c (1-x)^alpha (1+x)^beta`` with ``c``
chosen so that w integrates to one.  Bases are built from the classical
three-term recurrence in the standard (Szego) normalization, where
``P_j(1) = (alpha+1)_j / j!``, and scaled once per degree by the exact
squared norms so that ``L_j = P_j / sqrt(h_j)`` is orthonormal under the
probability measure.  All Gamma-function ratios are evaluated in
log-Gamma arithmetic so degrees up to a few hundred stay in range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import betaln, gammaln

from .errors import DomainError

__all__ = [
    "JacobiParams",
    "OrthonormalBasis",
    "make_params",
    "weight",
    "orthonormal_basis",
    "eval_basis",
    "squared_norm",
    "endpoint_sup",
    "christoffel_k",
]


@dataclass(frozen=True)
class JacobiParams:
    """Normalized Jacobi weight ``c (1-x)^alpha (1+x)^beta`` on [-1, 1].

    ``gamma = max(alpha, beta)`` controls the critical sampling rate.  The
    derived constants feed the probability bounds:

    * ``cbar  = c 2^min(alpha,beta) / (1+gamma)``
    * ``cbar1 = c 2^alpha / (1+beta)``  (left-endpoint order statistics)
    * ``cbar2 = c 2^beta / (1+alpha)``  (right endpoint, by reflection)
    """

    alpha: float
    beta: float
    c: float
    gamma: float
    cbar: float
    cbar1: float
    cbar2: float


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    """Degree-indexed recurrence data for the orthonormal polynomials.

    ``rec_a``, ``rec_b``, ``rec_c`` hold the coefficients of
    ``P_j = (a_j x + b_j) P_{j-1} - c_j P_{j-2}`` (slot 0 unused) and
    ``sqnorm[j]`` is ``h_j = c * integral(P_j^2 w)``; ``L_j = P_j/sqrt(h_j)``.
    """

    params: JacobiParams
    degree: int
    rec_a: np.ndarray
    rec_b: np.ndarray
    rec_c: np.ndarray
    sqnorm: np.ndarray
    inv_sqrt_norm: np.ndarray


def make_params(alpha: float, beta: float) -> JacobiParams:
    """Build a :class:`JacobiParams`, normalizing the weight to unit mass."""
    alpha = float(alpha)
    beta = float(beta)
    if not alpha > -1.0:
        raise DomainError("alpha must exceed -1")
    if not beta > -1.0:
        raise DomainError("beta must exceed -1")
    # c = 1 / (2^(alpha+beta+1) * Beta(alpha+1, beta+1))
    log_c = -((alpha + beta + 1.0) * np.log(2.0) + betaln(alpha + 1.0, beta + 1.0))
    c = float(np.exp(log_c))
    gamma = max(alpha, beta)
    cbar = c * 2.0 ** min(alpha, beta) / (1.0 + gamma)
    cbar1 = c * 2.0**alpha / (1.0 + beta)
    cbar2 = c * 2.0**beta / (1.0 + alpha)
    return JacobiParams(alpha, beta, c, gamma, cbar, cbar1, cbar2)


def _check_domain(x: np.ndarray) -> None:
    if x.size and (np.abs(x) > 1.0).any():
        raise DomainError("evaluation points must lie in [-1, 1]")


def weight(params: JacobiParams, x) -> np.ndarray | float:
    """Evaluate the weight density.  Singular endpoints are rejected."""
    arr = np.asarray(x, dtype=float)
    _check_domain(arr)
    if params.alpha < 0.0 and np.any(arr == 1.0):
        raise DomainError("singular endpoint: weight unbounded at x = 1")
    if params.beta < 0.0 and np.any(arr == -1.0):
        raise DomainError("singular endpoint: weight unbounded at x = -1")
    out = params.c * (1.0 - arr) ** params.alpha * (1.0 + arr) ** params.beta
    return out if arr.shape else float(out)


def squared_norm(params: JacobiParams, j: int) -> float:
    """Squared norm h_j of the degree-j standard Jacobi polynomial.

    Computed under the probability-normalized measure; h_0 = 1 by the Beta
    identity (the Gamma quotient is 0*inf at alpha+beta = -1).
    """
    if j < 0:
        raise DomainError("degree must be nonnegative")
    if j == 0:
        return 1.0
    a, b = params.alpha, params.beta
    log_h = (
        -betaln(a + 1.0, b + 1.0)
        + gammaln(j + a + 1.0)
        + gammaln(j + b + 1.0)
        - np.log(2.0 * j + a + b + 1.0)
        - gammaln(j + 1.0)
        - gammaln(j + a + b + 1.0)
    )
    return float(np.exp(log_h))


def endpoint_sup(params: JacobiParams, j: int) -> float:
    """Sup norm ``(gamma+1)_j / j!`` of P_j, attained at an endpoint.

    Valid only when gamma = max(alpha, beta) >= -1/2; below that the
    maximum moves into the interior and a grid search must be used.
    """
    if j < 0:
        raise DomainError("degree must be nonnegative")
    g = params.gamma
    if g < -0.5:
        raise DomainError(
            "interior-maximum regime (max(alpha, beta) < -1/2): use a grid search"
        )
    return float(np.exp(gammaln(j + g + 1.0) - gammaln(g + 1.0) - gammaln(j + 1.0)))


def orthonormal_basis(params: JacobiParams, degree: int) -> OrthonormalBasis:
    """Precompute recurrence coefficients and norms for degrees 0..degree."""
    if degree < 0:
        raise DomainError("degree must be nonnegative")
    a, b = params.alpha, params.beta
    s = a + b
    m = degree
    rec_a = np.zeros(m + 1)
    rec_b = np.zeros(m + 1)
    rec_c = np.zeros(m + 1)
    if m >= 1:
        rec_a[1] = 0.5 * (s + 2.0)
        rec_b[1] = 0.5 * (a - b)
    if m >= 2:
        j = np.arange(2, m + 1, dtype=float)
        denom = 2.0 * j * (j + s) * (2.0 * j + s - 2.0)
        rec_a[2:] = (2.0 * j + s - 1.0) * (2.0 * j + s) * (2.0 * j + s - 2.0) / denom
        rec_b[2:] = (2.0 * j + s - 1.0) * (a * a - b * b) / denom
        rec_c[2:] = 2.0 * (j + a - 1.0) * (j + b - 1.0) * (2.0 * j + s) / denom
    sqnorm = np.array([squared_norm(params, j) for j in range(m + 1)])
    return OrthonormalBasis(
        params=params,
        degree=m,
        rec_a=rec_a,
        rec_b=rec_b,
        rec_c=rec_c,
        sqnorm=sqnorm,
        inv_sqrt_norm=1.0 / np.sqrt(sqnorm),
    )


def eval_basis(basis: OrthonormalBasis, x) -> np.ndarray:
    """Evaluate L_0..L_m at ``x``; output shape is ``x.shape + (m+1,)``.

    Entry 0 is exactly 1 (the constant has unit norm under a probability
    measure).
    """
    arr = np.asarray(x, dtype=float)
    _check_domain(arr)
    m = basis.degree
    out = np.empty(arr.shape + (m + 1,))
    out[..., 0] = 1.0
    if m == 0:
        return out
    p_prev2 = np.ones_like(arr)
    p_prev = basis.rec_a[1] * arr + basis.rec_b[1]
    out[..., 1] = p_prev * basis.inv_sqrt_norm[1]
    for j in range(2, m + 1):
        p = (basis.rec_a[j] * arr + basis.rec_b[j]) * p_prev - basis.rec_c[j] * p_prev2
        out[..., j] = p * basis.inv_sqrt_norm[j]
        p_prev2, p_prev = p_prev, p
    return out


def christoffel_k(basis: OrthonormalBasis) -> float:
    """Sup over [-1, 1] of ``sum_j L_j(x)^2`` for the m+1 basis functions.

    For min(alpha, beta) >= -1/2 every |L_j| peaks at an endpoint, so only
    x = +-1 is checked.  Otherwise the sum is maximized over a clustered
    Chebyshev grid of max(4096, 50 m) points plus both endpoints; the
    polynomial values stay finite there even for singular weights.
    """
    p = basis.params
    if min(p.alpha, p.beta) >= -0.5:
        vals = eval_basis(basis, np.array([-1.0, 1.0]))
        return float(np.max(np.sum(vals * vals, axis=-1)))
    m = basis.degree
    size = max(4096, 50 * m)
    i = np.arange(size)
    grid = np.cos(np.pi * (2.0 * i + 1.0) / (2.0 * size))
    grid = np.concatenate((grid, [-1.0, 1.0]))
    vals = eval_basis(basis, grid)
    return float(np.max(np.sum(vals * vals, axis=-1)))
