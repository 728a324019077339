"""Self-contained dense kernels: eigensolver, quadrature, and a simplex LP.

These back the rest of the package where an independent, fully inspectable
route matters: the cyclic Jacobi eigensolver cross-checks the LAPACK path
used in production, Gauss-Jacobi quadrature verifies orthonormality and
weight normalization, and the simplex solver hosts the exact computation
of the Lebesgue-type sample quantity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ContractError, DomainError, LsqStabilityError
from .jacobi import JacobiParams

__all__ = [
    "LPProblem",
    "LPResult",
    "symmetric_eigen",
    "gauss_jacobi_nodes",
    "chebyshev_grid",
    "lp_maximize",
]

_MAX_SWEEPS = 100
_MAX_PIVOTS = 100_000


def chebyshev_grid(size: int) -> np.ndarray:
    """Ascending first-kind Chebyshev points cos(pi (2i+1) / (2 size))."""
    i = np.arange(size)
    return np.sort(np.cos(np.pi * (2.0 * i + 1.0) / (2.0 * size)))


def symmetric_eigen(a: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius mass drops below
    ``tol * ||A||_F``.  Returns eigenvalues ascending and the matching
    orthogonal eigenvector matrix (columns).
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError("matrix must be square")
    d = a.shape[0]
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if np.abs(a - a.T).max(initial=0.0) > 1e-14 * scale:
        raise ContractError("matrix is not symmetric")
    w = a.copy()
    v = np.eye(d)
    norm = float(np.linalg.norm(w))
    if norm == 0.0 or d == 1:
        order = np.argsort(np.diag(w))
        return np.diag(w)[order], v[:, order]
    for _ in range(_MAX_SWEEPS):
        off = float(np.linalg.norm(w - np.diag(np.diag(w))))
        if off <= tol * norm:
            break
        small = off / (d * d)
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = w[p, q]
                if abs(apq) <= small * 1e-3:
                    continue
                tau = (w[q, q] - w[p, p]) / (2.0 * apq)
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0.0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rp, rq = w[p, :].copy(), w[q, :].copy()
                w[p, :] = c * rp - s * rq
                w[q, :] = s * rp + c * rq
                cp, cq = w[:, p].copy(), w[:, q].copy()
                w[:, p] = c * cp - s * cq
                w[:, q] = s * cp + c * cq
                w[p, q] = 0.0
                w[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise LsqStabilityError("jacobi sweeps failed to converge")
    eigvals = np.diag(w).copy()
    order = np.argsort(eigvals, kind="stable")
    return eigvals[order], v[:, order]


def _monic_recurrence(params: JacobiParams, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the k x k symmetric recurrence matrix."""
    a, b = params.alpha, params.beta
    s = a + b
    diag = np.empty(k)
    diag[0] = (b - a) / (s + 2.0)
    if k > 1:
        j = np.arange(1, k, dtype=float)
        diag[1:] = (b * b - a * a) / ((2.0 * j + s) * (2.0 * j + s + 2.0))
    off = np.empty(max(k - 1, 0))
    if k > 1:
        off[0] = np.sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) ** 2 * (3.0 + s)))
    if k > 2:
        j = np.arange(2, k, dtype=float)
        num = 4.0 * j * (j + a) * (j + b) * (j + s)
        den = (2.0 * j + s) ** 2 * ((2.0 * j + s) ** 2 - 1.0)
        off[1:] = np.sqrt(num / den)
    return diag, off


def gauss_jacobi_nodes(params: JacobiParams, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Golub-Welsch nodes and weights for the normalized Jacobi measure.

    Weights sum to one; the rule integrates polynomials of degree up to
    2k-1 exactly.
    """
    if k < 1:
        raise DomainError("quadrature order must be at least 1")
    diag, off = _monic_recurrence(params, k)
    nodes, vecs = eigh_tridiagonal(diag, off)
    weights = vecs[0, :] ** 2
    weights /= weights.sum()
    return nodes, weights


@dataclass(frozen=True)
class LPProblem:
    """Maximize ``objective . z`` subject to ``constraints @ z <= bounds``.

    Variables are free (unsigned); every row of ``constraints`` must have
    length equal to the variable count.
    """

    objective: np.ndarray
    constraints: np.ndarray
    bounds: np.ndarray


@dataclass(frozen=True)
class LPResult:
    """Solver outcome; ``dual`` holds row prices when status is optimal."""

    status: str  # "optimal" | "infeasible" | "unbounded"
    value: float
    argmax: np.ndarray | None
    dual: np.ndarray | None


def _simplex(tab: np.ndarray, cost: np.ndarray, basis: np.ndarray,
             allowed: np.ndarray, tol: float) -> str:
    """Run the simplex in place on [T | rhs]; returns a status.

    Entering variables follow Dantzig's rule until the objective stalls on
    a degenerate vertex, then Bland's anti-cycling rule takes over.  The
    ratio test is two-pass: among rows within a relative tolerance of the
    minimum ratio it prefers the largest pivot element (smallest basis
    index in Bland mode, unless that pivot is negligible), which keeps the
    tableau from being corrupted by near-zero pivots.
    """
    ncols = tab.shape[1] - 1
    red = cost - cost[basis] @ tab[:, :ncols]
    bland = False
    stall = 0
    value = -np.inf
    for _ in range(_MAX_PIVOTS):
        cand = np.flatnonzero(allowed & (red > tol))
        if cand.size == 0:
            return "optimal"
        enter = int(cand[0]) if bland else int(cand[np.argmax(red[cand])])
        col = tab[:, enter]
        mask = col > tol
        if not mask.any():
            return "unbounded"
        ratios = np.where(mask, tab[:, -1] / np.where(mask, col, 1.0), np.inf)
        best = ratios.min()
        ties = np.flatnonzero(ratios <= best * (1.0 + 1e-9) + 1e-12)
        leave = int(ties[np.argmax(col[ties])])
        if bland:
            by_index = int(ties[np.argmin(basis[ties])])
            if col[by_index] >= 1e-7 * col[leave]:
                leave = by_index
        piv = tab[leave, enter]
        tab[leave, :] /= piv
        delta = tab[:, enter].copy()
        delta[leave] = 0.0
        tab -= np.outer(delta, tab[leave, :])
        red -= red[enter] * tab[leave, :-1]
        red[enter] = 0.0
        basis[leave] = enter
        new_value = cost[basis] @ tab[:, -1]
        if new_value > value + 1e-12 * (1.0 + abs(value)):
            value = new_value
            stall = 0
        else:
            stall += 1
            if stall > 50:
                bland = True
    raise LsqStabilityError("simplex pivot limit exceeded")


def lp_maximize(problem: LPProblem, tol: float = 1e-9) -> LPResult:
    """Dense two-phase simplex with Bland's anti-cycling rule.

    Free variables are split into positive and negative parts; rows with
    negative bounds get artificial variables driven out in phase one.
    """
    c = np.asarray(problem.objective, dtype=float)
    a = np.atleast_2d(np.asarray(problem.constraints, dtype=float))
    b = np.asarray(problem.bounds, dtype=float)
    d = c.size
    nc = b.size
    if d < 1:
        raise ContractError("need at least one variable")
    if nc < 1 or a.shape != (nc, d):
        raise ContractError("constraint matrix must be (n_constraints, n_variables)")

    sign = np.where(b < 0.0, -1.0, 1.0)
    a1 = sign[:, None] * a
    b1 = sign * b
    # graded 1e-10-relative relaxation: breaks vertex degeneracy (many
    # constraints active at once) while staying far inside the tolerance
    b1 = b1 + 1e-10 * (np.arange(nc) + 1.0) / nc * np.maximum(1.0, b1)
    slack = np.diag(sign)
    work = np.hstack((a1, -a1, slack))
    n_struct = 2 * d + nc
    art_rows = np.flatnonzero(sign < 0.0)
    n_art = art_rows.size
    if n_art:
        art_cols = np.zeros((nc, n_art))
        for idx, r in enumerate(art_rows):
            art_cols[r, idx] = 1.0
        work = np.hstack((work, art_cols))
    ncols = work.shape[1]

    tab = np.hstack((work, b1[:, None]))
    basis = np.empty(nc, dtype=int)
    next_art = 0
    for r in range(nc):
        if sign[r] > 0.0:
            basis[r] = 2 * d + r
        else:
            basis[r] = n_struct + next_art
            next_art += 1
    allowed = np.ones(ncols, dtype=bool)

    if n_art:
        phase1 = np.zeros(ncols)
        phase1[n_struct:] = -1.0
        status = _simplex(tab, phase1, basis, allowed, tol)
        if status != "optimal":
            raise LsqStabilityError("phase-1 simplex cannot be unbounded")
        if -(phase1[basis] @ tab[:, -1]) > tol:
            return LPResult("infeasible", np.nan, None, None)
        allowed[n_struct:] = False
        # pivot lingering level-0 artificials out of the basis; otherwise a
        # later entering column with a negative entry in their row could
        # push them positive and silently violate the original constraints
        for r in range(nc):
            if basis[r] >= n_struct:
                row = np.abs(tab[r, :n_struct])
                if row.max() <= tol:
                    continue  # redundant row, provably inert
                enter = int(np.argmax(row))
                piv = tab[r, enter]
                tab[r, :] /= piv
                delta = tab[:, enter].copy()
                delta[r] = 0.0
                tab -= np.outer(delta, tab[r, :])
                basis[r] = enter

    cost = np.zeros(ncols)
    cost[:d] = c
    cost[d : 2 * d] = -c
    status = _simplex(tab, cost, basis, allowed, tol)
    if status == "unbounded":
        return LPResult("unbounded", np.inf, None, None)

    x = np.zeros(ncols)
    x[basis] = tab[:, -1]
    z = x[:d] - x[d : 2 * d]
    red = cost - cost[basis] @ tab[:, :ncols]
    dual = -red[2 * d : 2 * d + nc]
    return LPResult("optimal", float(c @ z), z, dual)
