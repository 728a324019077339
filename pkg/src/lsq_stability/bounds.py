"""Explicit stability bounds: growth exponents, sufficiency thresholds, and
a certified witness-polynomial lower bound.

The witness construction starts from the degree-m Chebyshev polynomial and
replaces its K leftmost zeros with the K smallest sample points (plus -1).
When the samples cluster no faster than the Chebyshev zeros, the resulting
polynomial stays small at every sample yet is forced to be large between
the first two replaced zeros, which certifies exponential growth of the
Lebesgue-type quantity B(n, m) = sup ||p||_inf / ||p||_{n,inf}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dense import chebyshev_grid
from .errors import ContractError, DomainError
from .jacobi import JacobiParams, OrthonormalBasis, christoffel_k, make_params
from .sampling import SampleSet, orderstat_event

__all__ = [
    "WitnessResult",
    "cohen_iota",
    "default_big_c",
    "theoretical_exponent",
    "cohen_threshold",
    "witness_lower_bound",
]


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of the witness construction.

    ``bound`` is a certified lower bound on B(n, m) for the given sample
    set: it is the ratio of the witness's grid maximum to its largest
    absolute value over the samples, so it holds regardless of whether the
    order-statistics event does.  ``sample_max`` is that denominator; under
    the event (case I) it is at most 1.
    """

    case: str  # "I" | "II"
    k: int
    lam: float
    bound: float
    event_holds: bool
    sup_location: float
    sample_max: float


def cohen_iota(r: float) -> float:
    """Oversampling constant (1 - log 2) / (2 + 2r) for failure rate n^-r."""
    if r <= 0.0:
        raise DomainError("r must be positive")
    return (1.0 - math.log(2.0)) / (2.0 + 2.0 * r)


def default_big_c(params: JacobiParams) -> float:
    """Default C, one above the hypothesis floor 2 e^2 cbar of the bounds."""
    return 2.0 * math.e**2 * params.cbar + 1.0


def theoretical_exponent(m: int, n: int, params: JacobiParams, big_c: float) -> float:
    """Growth exponent ``lambda = (m^(2(1+gamma)) / (C n))^(1/(1+2gamma))``."""
    if m < 1 or n < 1:
        raise DomainError("m and n must be at least 1")
    if big_c <= 0.0:
        raise DomainError("C must be positive")
    g = params.gamma
    if g <= -0.5:
        raise DomainError("theory requires max(alpha, beta) > -1/2")
    return math.exp(
        (2.0 * (1.0 + g) * math.log(m) - math.log(big_c * n)) / (1.0 + 2.0 * g)
    )


def cohen_threshold(basis: OrthonormalBasis, r: float) -> int:
    """Smallest n >= m+2 with ``K(m+1) <= iota * n / log n`` (natural log).

    Found by doubling then bisection; n/log n is increasing on the searched
    range, so the returned n satisfies the predicate and n-1 does not.
    """
    iota = cohen_iota(r)
    k = christoffel_k(basis)

    def ok(n: int) -> bool:
        return k <= iota * n / math.log(n)

    lo = basis.degree + 2
    if ok(lo):
        return lo
    hi = lo
    while not ok(hi):
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _log_abs_product(x: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """log of |prod (x - root)| for each x; -inf where x hits a root."""
    with np.errstate(divide="ignore"):
        return np.sum(np.log(np.abs(x[:, None] - roots[None, :])), axis=1)


def witness_lower_bound(samples: SampleSet, m: int, params: JacobiParams,
                        big_c: float | None = None) -> WitnessResult:
    """Certified lower bound on B(n, m) from the replaced-zeros witness.

    If alpha > beta the points are reflected (x -> -x) and the exponents
    swapped first, so the clustering analysis always happens at the left
    endpoint.  With b the effective right exponent,
    ``lam = (m^(2(1+b)) / (C n))^(1/(1+2b))`` decides the case split at
    ``c_hat = max((2 pi^2)^((1+b)/(1+2b)), 9 pi^2 / 8)``:

    * case II (lam <= c_hat): the trivial bound 1 is returned;
    * case I: K = floor(lam / (2 pi^2)^((1+b)/(1+2b))) zeros are replaced
      and the witness ratio is maximized over a Chebyshev grid of
      max(8192, 100 m) points plus the near-edge probe -cos(pi/m).

    The witness is evaluated through its factored polynomial form in
    log-magnitude arithmetic, so samples sitting exactly on Chebyshev zeros
    cancel instead of producing 0/0.
    """
    if not samples.sorted:
        raise ContractError("witness_lower_bound requires a sorted sample set")
    n = samples.n
    if not 1 <= m <= n - 1:
        raise ContractError("need 1 <= m <= n-1")
    if params.gamma <= -0.5:
        raise DomainError("theory requires max(alpha, beta) > -1/2")
    if big_c is None:
        big_c = default_big_c(params)
    if big_c <= 0.0:
        raise DomainError("C must be positive")

    reflected = params.alpha > params.beta
    if reflected:
        eff = make_params(params.beta, params.alpha)
        pts = np.sort(-samples.points)
        eff_samples = SampleSet(points=pts, provenance=samples.provenance, sorted=True)
    else:
        eff = params
        pts = samples.points
        eff_samples = samples

    event_holds, _ = orderstat_event(eff_samples, eff, big_c)

    b = eff.beta
    expo = (1.0 + b) / (1.0 + 2.0 * b)
    lam = math.exp((2.0 * (1.0 + b) * math.log(m) - math.log(big_c * n)) / (1.0 + 2.0 * b))
    c_hat = max((2.0 * math.pi**2) ** expo, 9.0 * math.pi**2 / 8.0)

    if lam <= c_hat or m < 2:
        return WitnessResult("II", 0, lam, 1.0, event_holds, math.nan, math.nan)

    k = int(lam / (2.0 * math.pi**2) ** expo)
    k = min(max(k, 1), m - 1)

    cheb_zeros = -np.cos(np.pi * (2.0 * np.arange(m) + 1.0) / (2.0 * m))
    # Witness roots after cancelling the replaced Chebyshev factors:
    # p(x) = 1/2 * 2^(m-1) * prod_{j<=k}(x - z_j) * prod_{j>k}(x - y_j)
    roots = np.concatenate(([-1.0], pts[:k], cheb_zeros[k + 1:]))
    log_lead = math.log(0.5) + (m - 1) * math.log(2.0)

    grid = np.concatenate((chebyshev_grid(max(8192, 100 * m)), [-1.0, 1.0]))
    poles = cheb_zeros[: k + 1]
    near = np.abs(grid[:, None] - poles[None, :]) < 1e-12
    if near.any():  # sidestep 0/0 in the ratio form of the witness
        grid = np.where(near.any(axis=1), grid + 1e-12, grid)
    x_star = -math.cos(math.pi / m)  # midway between the two leftmost zeros
    grid = np.concatenate((grid, [x_star]))

    log_num = log_lead + _log_abs_product(grid, roots)
    best = int(np.argmax(log_num))
    log_den = log_lead + _log_abs_product(pts, roots)
    den_log_max = float(np.max(log_den))

    bound = max(1.0, math.exp(float(log_num[best]) - den_log_max))
    sup_x = float(grid[best])
    if reflected:
        sup_x = -sup_x
    return WitnessResult("I", k, lam, bound, event_holds, sup_x,
                         math.exp(den_log_max))
