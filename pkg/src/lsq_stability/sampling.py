"""Point-set generation on [-1, 1] and the order-statistics event.

Random draws use the affine Beta representation of the Jacobi measure:
``x = 2t - 1`` with ``t ~ Beta(beta+1, alpha+1)``.  Draws come from
numpy's PCG64 ``Generator.beta`` (gamma-ratio method), so a fixed seed
reproduces the same points bit-for-bit across runs and thread counts.
Deterministic grids invert the CDF by bisection instead, which pins them
independently of any generator.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.special import betainc

from .errors import ContractError, DomainError
from .jacobi import JacobiParams

__all__ = [
    "SampleSet",
    "cdf",
    "sample_iid",
    "equidistributed",
    "equispaced",
    "sort_samples",
    "orderstat_thresholds",
    "orderstat_event",
    "derived_rng",
    "to_text",
    "from_text",
]


@dataclass(frozen=True, eq=False)
class SampleSet:
    """n points in [-1, 1] with provenance and sort status."""

    points: np.ndarray
    provenance: str  # "iid" | "equidistributed" | "equispaced"
    sorted: bool
    seed: int | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.size and (np.abs(pts) > 1.0).any():
            raise ContractError("sample points must lie in [-1, 1]")
        if self.sorted and pts.size > 1 and not (pts[1:] >= pts[:-1]).all():
            raise ContractError("sorted flag set on non-nondecreasing points")
        if pts.flags.writeable:  # freeze a private copy, never the caller's array
            pts = pts.copy()
            pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return int(self.points.size)


def _wrap(points: np.ndarray, provenance: str, sorted_flag: bool,
          seed: int | None = None) -> SampleSet:
    return SampleSet(points=np.asarray(points, dtype=float),
                     provenance=provenance, sorted=sorted_flag, seed=seed)


def cdf(params: JacobiParams, x) -> np.ndarray | float:
    """CDF of the Jacobi measure: the regularized incomplete Beta function
    ``I_{(1+x)/2}(beta+1, alpha+1)``."""
    arr = np.asarray(x, dtype=float)
    if arr.size and (np.abs(arr) > 1.0).any():
        raise DomainError("cdf argument must lie in [-1, 1]")
    out = betainc(params.beta + 1.0, params.alpha + 1.0, 0.5 * (1.0 + arr))
    return out if arr.shape else float(out)


def derived_rng(master_seed: int, *key: int) -> np.random.Generator:
    """Child generator for task (m, n, trial, ...); independent of scheduling."""
    ss = np.random.SeedSequence(int(master_seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)


def sample_iid(params: JacobiParams, n: int, seed) -> SampleSet:
    """n i.i.d. draws from the Jacobi measure with a pinned generator."""
    if n < 0:
        raise DomainError("sample count must be nonnegative")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    t = rng.beta(params.beta + 1.0, params.alpha + 1.0, size=n)
    pts = 2.0 * t - 1.0
    return _wrap(pts, "iid", sorted_flag=n <= 1,
                 seed=seed if isinstance(seed, int) else None)


def equidistributed(params: JacobiParams, n: int) -> SampleSet:
    """Points with CDF values (i-1)/(n-1), solved by bisection to 1e-13.

    The first and last points are exactly -1 and 1.  For exponents below
    -1/2 the extreme interior quantiles can sit closer to an endpoint than
    one float64 ulp; the bisection then returns the nearest representable
    point.
    """
    if n < 2:
        raise DomainError("equidistributed grids need at least 2 points")
    targets = np.arange(1, n - 1, dtype=float) / (n - 1)
    lo = np.full(targets.shape, -1.0)
    hi = np.full(targets.shape, 1.0)
    for _ in range(60):  # interval width 2^-59 < 1e-13
        mid = 0.5 * (lo + hi)
        below = cdf(params, mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    pts = np.concatenate(([-1.0], 0.5 * (lo + hi), [1.0]))
    return _wrap(pts, "equidistributed", sorted_flag=True)


def equispaced(n: int) -> SampleSet:
    """The grid x_i = -1 + 2 (i-1) / (n-1)."""
    if n < 2:
        raise DomainError("equispaced grids need at least 2 points")
    return _wrap(np.linspace(-1.0, 1.0, n), "equispaced", sorted_flag=True)


def sort_samples(s: SampleSet) -> SampleSet:
    """Nondecreasing copy of the sample set."""
    pts = np.sort(s.points, kind="stable")
    pts.setflags(write=False)
    return replace(s, points=pts, sorted=True)


def orderstat_thresholds(params: JacobiParams, n: int, big_c: float) -> np.ndarray:
    """Lower thresholds ``(k / (C n))^(1/(1+beta)) - 1`` for k = 1..n."""
    if big_c <= 0.0:
        raise DomainError("C must be positive")
    k = np.arange(1, n + 1, dtype=float)
    return (k / (big_c * n)) ** (1.0 / (1.0 + params.beta)) - 1.0


def orderstat_event(s: SampleSet, params: JacobiParams,
                    big_c: float) -> tuple[bool, int | None]:
    """Check ``x_(k) >= (k/(Cn))^(1/(1+beta)) - 1`` for every k.

    Requires a sorted sample set; returns the smallest violated k (1-based)
    when the event fails.
    """
    if not s.sorted:
        raise ContractError("orderstat_event requires a sorted sample set")
    if s.n == 0:
        return True, None
    bad = s.points < orderstat_thresholds(params, s.n, big_c)
    if not bad.any():
        return True, None
    return False, int(np.flatnonzero(bad)[0]) + 1


def to_text(s: SampleSet) -> str:
    """One point per line, 17 significant digits (round-trip exact)."""
    return "".join(f"{x:.17g}\n" for x in s.points)


def from_text(text: str, provenance: str = "iid") -> SampleSet:
    pts = np.array([float(line) for line in text.split()], dtype=float)
    srt = bool(np.all(pts[1:] >= pts[:-1])) if pts.size else True
    return _wrap(pts, provenance, sorted_flag=srt)
