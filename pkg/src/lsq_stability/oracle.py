"""Brute-force reference computations for the stability quantities.

``b_exact`` evaluates the Lebesgue-type sample quantity
``sup_p ||p||_inf / ||p||_{n,inf}`` exactly (up to grid resolution in the
outer sup) by linear programming: for each evaluation point x* it finds
the degree-m polynomial bounded by one at every sample that is largest at
x*.  Chebyshev coefficients keep the constraint matrices well conditioned;
monomials fail catastrophically around degree 15.
"""

from __future__ import annotations

import numpy as np

from .conditioning import GramMatrix
from .dense import LPProblem, chebyshev_grid, lp_maximize
from .errors import DomainError, LsqStabilityError, RankDeficiencyError
from .sampling import SampleSet

__all__ = ["b_exact", "lebesgue_max", "d_random_check"]

_B_EXACT_DEGREE_CAP = 20  # desk-scale cap; LP conditioning degrades beyond


def _chebyshev_design(x: np.ndarray, m: int) -> np.ndarray:
    """Rows of T_0..T_m values at the points x."""
    theta = np.arccos(np.clip(x, -1.0, 1.0))
    return np.cos(np.outer(theta, np.arange(m + 1)))


def b_exact(samples: SampleSet, m: int, grid_size: int = 4096,
            extra_points=()) -> float:
    """Exact sup over a grid of the Lebesgue-type quantity.

    For each x* in a Chebyshev grid of ``grid_size`` points, plus both
    endpoints and any ``extra_points``, solves
    ``max p(x*)  s.t.  -1 <= p(x_i) <= 1`` over degree-m polynomials.  By
    symmetry (p -> -p) the signed maximum equals the absolute one.
    """
    if m > _B_EXACT_DEGREE_CAP:
        raise DomainError(f"b_exact supports degrees up to {_B_EXACT_DEGREE_CAP}")
    if np.unique(samples.points).size < m + 1:
        raise RankDeficiencyError("need at least m+1 distinct sample points")
    if grid_size < 8 * m:
        raise DomainError("grid_size must be at least 8*m")
    rows = _chebyshev_design(samples.points, m)
    constraints = np.vstack((rows, -rows))
    bounds = np.ones(constraints.shape[0])
    targets = np.concatenate((chebyshev_grid(grid_size), [-1.0, 1.0],
                              np.asarray(extra_points, dtype=float)))
    objectives = _chebyshev_design(targets, m)
    best = 1.0  # p = 1 is feasible, so the sup is at least 1
    for obj in objectives:
        res = lp_maximize(LPProblem(obj, constraints, bounds))
        if res.status != "optimal":
            raise LsqStabilityError(f"lebesgue LP unexpectedly {res.status}")
        if res.value > best:
            best = res.value
    return best


def lebesgue_max(points: np.ndarray, eval_points: np.ndarray) -> float:
    """Max over eval_points of the Lagrange interpolation Lebesgue function.

    Independent cross-check for ``b_exact`` at n = m+1: there the extremal
    polynomial is the +-1 interpolant, so the two quantities agree.  Uses
    the barycentric form ``sum_i |w_i/(x-x_i)| / |sum_i w_i/(x-x_i)|``.
    """
    points = np.asarray(points, dtype=float)
    diffs = points[:, None] - points[None, :]
    np.fill_diagonal(diffs, 1.0)
    w = 1.0 / diffs.prod(axis=1)
    best = 1.0
    for x in np.asarray(eval_points, dtype=float):
        gaps = x - points
        on_node = np.abs(gaps) < 1e-15
        if on_node.any():
            continue  # Lebesgue function equals 1 at the nodes
        terms = w / gaps
        best = max(best, float(np.abs(terms).sum() / np.abs(terms.sum())))
    return best


def d_random_check(g: GramMatrix, trials: int, seed: int) -> float:
    """Randomized confirmation of the condition number.

    Maximizes ``sqrt(w.w / w'Gw)`` over random unit coefficient vectors and
    over the eigenvector of the smallest eigenvalue, where the Rayleigh
    quotient makes the value exact.
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    d = g.entries.shape[0]
    vecs = rng.standard_normal((trials, d))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    eigvals, eigvecs = np.linalg.eigh(g.entries)
    vecs = np.vstack((vecs, eigvecs[:, 0]))
    quads = np.einsum("ij,jk,ik->i", vecs, g.entries, vecs)
    return float(np.max(1.0 / np.sqrt(quads)))
