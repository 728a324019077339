"""Seeded Monte Carlo harnesses mapping stability across sampling rates.

Every cell (m, n, trial) derives its own child generator from the master
seed, so results do not depend on scheduling or worker count, and every
harness reduces its records in a fixed (m, n) order.  All tables serialize
to CSV with a mandatory header and 17-significant-digit reals, which makes
identical configurations produce byte-identical files.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import default_big_c, cohen_threshold, witness_lower_bound
from .conditioning import (
    LAMBDA_MIN_CLAMP,
    gram,
    least_squares_fit,
    spectral_distance_to_identity,
)
from ._kernels import gram_kahan_batch
from .errors import DomainError, LsqStabilityError
from .jacobi import JacobiParams, eval_basis, make_params, orthonormal_basis
from .oracle import b_exact
from .sampling import derived_rng, orderstat_event, sample_iid, sort_samples

__all__ = [
    "ExperimentConfig",
    "StabilityRecord",
    "ConvergenceRecord",
    "WitnessOracleRecord",
    "STABILITY_HEADER",
    "CONVERGENCE_HEADER",
    "WITNESS_ORACLE_HEADER",
    "runge",
    "stability_map",
    "stability_csv",
    "orderstat_probability",
    "convergence_experiment",
    "convergence_csv",
    "cohen_sufficiency_experiment",
    "witness_vs_oracle",
    "witness_oracle_csv",
    "write_text",
]

STABILITY_HEADER = "alpha,beta,m,n,trials,mean_kappa,mean_log10_kappa,clamped_fraction"
CONVERGENCE_HEADER = "alpha,beta,tau,theta,m,n,median_sup_error"
WITNESS_ORACLE_HEADER = "m,n,seed,case,lambda,witness_bound,b_exact,event_holds"

_ORACLE_DEGREE_CAP = 20
THREADS_ENV_VAR = "LSQ_STABILITY_THREADS"


def runge(x):
    """The classic analytic-but-hard target 1 / (1 + 25 x^2)."""
    return 1.0 / (1.0 + 25.0 * np.asarray(x, dtype=float) ** 2)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def write_text(path: str, text: str) -> None:
    """Write CSV text, surfacing I/O failures with the path attached."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        err = LsqStabilityError(f"cannot write {path}: {exc}")
        err.code = "io"
        raise err from exc


def _workers(n_workers: int | None) -> int:
    if n_workers is not None:
        return max(1, n_workers)
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid over (m, n) plus the Monte Carlo setup.

    ``n_values`` gives the sample counts directly; alternatively
    ``tau``/``theta`` select the rate rule ``n = round(theta * m^(1/tau))``.
    """

    alpha: float
    beta: float
    m_values: tuple[int, ...]
    n_values: tuple[int, ...] | None = None
    tau: float | None = None
    theta: float | None = None
    trials: int = 100
    seed: int = 0
    big_c: float | None = None
    out: str | None = None

    def __post_init__(self):
        if len(self.m_values) == 0:
            raise DomainError("m range must be nonempty")
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if self.n_values is None and (self.tau is None or self.theta is None):
            raise DomainError("config needs n values or a tau/theta rate rule")
        if self.n_values is not None and len(self.n_values) == 0:
            raise DomainError("n range must be nonempty")

    def params(self) -> JacobiParams:
        return make_params(self.alpha, self.beta)


@dataclass(frozen=True)
class StabilityRecord:
    alpha: float
    beta: float
    m: int
    n: int
    trials: int
    mean_kappa: float
    mean_log10_kappa: float
    clamped_fraction: float


@dataclass(frozen=True)
class ConvergenceRecord:
    alpha: float
    beta: float
    tau: float
    theta: float
    m: int
    n: int
    median_sup_error: float


@dataclass(frozen=True)
class WitnessOracleRecord:
    m: int
    n: int
    seed: int
    case: str
    lam: float
    witness_bound: float
    b_exact: float | None
    event_holds: bool


def _stability_cell(params, basis, m, n, trials, master_seed) -> StabilityRecord:
    d = m + 1
    designs = np.empty((trials, d, n))
    for t in range(trials):
        pts = sample_iid(params, n, derived_rng(master_seed, m, n, t)).points
        designs[t] = eval_basis(basis, pts).T
    grams = gram_kahan_batch(designs)
    lam = np.linalg.eigvalsh(grams)[:, 0]
    clamped = lam < LAMBDA_MIN_CLAMP
    kappas = np.maximum(lam, LAMBDA_MIN_CLAMP) ** -0.5
    return StabilityRecord(
        alpha=params.alpha,
        beta=params.beta,
        m=m,
        n=n,
        trials=trials,
        mean_kappa=float(np.mean(kappas)),
        mean_log10_kappa=float(np.mean(np.log10(kappas))),
        clamped_fraction=float(np.mean(clamped)),
    )


def stability_map(config: ExperimentConfig,
                  n_workers: int | None = None) -> list[StabilityRecord]:
    """Mean condition number per (m, n) cell over seeded repeated samplings.

    Cells run in parallel worker threads; records come back in (m, n)
    order regardless of completion order.
    """
    if config.n_values is None:
        raise DomainError("stability_map needs explicit n values")
    params = config.params()
    bases = {m: orthonormal_basis(params, m) for m in sorted(set(config.m_values))}
    cells = [(m, n) for m in config.m_values for n in config.n_values if n > m]
    with ThreadPoolExecutor(max_workers=_workers(n_workers)) as pool:
        futures = {
            cell: pool.submit(_stability_cell, params, bases[cell[0]], cell[0],
                              cell[1], config.trials, config.seed)
            for cell in cells
        }
        return [futures[cell].result() for cell in cells]


def stability_csv(records: list[StabilityRecord]) -> str:
    lines = [STABILITY_HEADER]
    for r in records:
        lines.append(
            f"{_fmt(r.alpha)},{_fmt(r.beta)},{r.m},{r.n},{r.trials},"
            f"{_fmt(r.mean_kappa)},{_fmt(r.mean_log10_kappa)},"
            f"{_fmt(r.clamped_fraction)}"
        )
    return "\n".join(lines) + "\n"


def orderstat_probability(params: JacobiParams, n: int, big_c: float,
                          trials: int, seed: int) -> tuple[float, float]:
    """Monte Carlo frequency of the order-statistics event and its bound.

    Requires the hypothesis C > 2 e^2 cbar1; the bound is 1 - 2 e^2 cbar1/C.
    """
    floor = 2.0 * math.e**2 * params.cbar1
    if not big_c > floor:
        raise DomainError(f"C must exceed 2*e^2*cbar1 = {floor:.6g}")
    if trials < 1:
        raise DomainError("trials must be at least 1")
    hits = 0
    for t in range(trials):
        s = sort_samples(sample_iid(params, n, derived_rng(seed, n, t)))
        holds, _ = orderstat_event(s, params, big_c)
        hits += holds
    return hits / trials, 1.0 - floor / big_c


def convergence_experiment(config: ExperimentConfig, f) -> list[ConvergenceRecord]:
    """Median sup-norm fit error along the rate rule n = round(theta m^(1/tau)).

    Errors are measured on a fixed 2001-point equispaced evaluation grid;
    the median is taken over the configured trials.
    """
    if config.tau is None or config.theta is None:
        raise DomainError("convergence_experiment needs tau and theta")
    if not 0.0 < config.tau <= 1.0:
        raise DomainError("tau must lie in (0, 1]")
    if config.theta <= 0.0:
        raise DomainError("theta must be positive")
    params = config.params()
    eval_grid = np.linspace(-1.0, 1.0, 2001)
    records = []
    for m in config.m_values:
        n = max(int(round(config.theta * m ** (1.0 / config.tau))), m + 1)
        basis = orthonormal_basis(params, m)
        design_eval = eval_basis(basis, eval_grid)
        target = f(eval_grid)
        errs = np.empty(config.trials)
        for t in range(config.trials):
            samples = sample_iid(params, n, derived_rng(config.seed, m, n, t))
            u = least_squares_fit(basis, samples, f(samples.points))
            errs[t] = np.max(np.abs(design_eval @ u - target))
        records.append(ConvergenceRecord(
            alpha=params.alpha, beta=params.beta, tau=config.tau,
            theta=config.theta, m=m, n=n,
            median_sup_error=float(np.median(errs)),
        ))
    return records


def convergence_csv(records: list[ConvergenceRecord]) -> str:
    lines = [CONVERGENCE_HEADER]
    for r in records:
        lines.append(
            f"{_fmt(r.alpha)},{_fmt(r.beta)},{_fmt(r.tau)},{_fmt(r.theta)},"
            f"{r.m},{r.n},{_fmt(r.median_sup_error)}"
        )
    return "\n".join(lines) + "\n"


def cohen_sufficiency_experiment(params: JacobiParams, m: int, r: float,
                                 trials: int, seed: int) -> tuple[int, float, float]:
    """Empirical check of the sufficiency threshold.

    Returns (n_star, empirical frequency of ||G - I|| <= 1/2 at n = n_star,
    target probability 1 - 2 n_star^-r).
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    basis = orthonormal_basis(params, m)
    n_star = cohen_threshold(basis, r)
    hits = 0
    for t in range(trials):
        samples = sample_iid(params, n_star, derived_rng(seed, m, n_star, t))
        dist = spectral_distance_to_identity(gram(basis, samples))
        hits += dist <= 0.5
    return n_star, hits / trials, 1.0 - 2.0 * n_star ** (-r)


def witness_vs_oracle(config: ExperimentConfig,
                      grid_size: int | None = None) -> list[WitnessOracleRecord]:
    """Side-by-side certified witness bounds and exact oracle values.

    The oracle grid additionally includes the witness's maximizer, so a
    correct implementation can never report a witness bound above the
    oracle column.  Degrees beyond the oracle cap leave that column empty.
    """
    if config.n_values is None:
        raise DomainError("witness_vs_oracle needs explicit n values")
    params = config.params()
    big_c = config.big_c if config.big_c is not None else default_big_c(params)
    records = []
    for m in config.m_values:
        gs = grid_size if grid_size is not None else max(128, 8 * m)
        for n in config.n_values:
            if n <= m:
                continue
            for t in range(config.trials):
                samples = sort_samples(
                    sample_iid(params, n, derived_rng(config.seed, m, n, t)))
                wr = witness_lower_bound(samples, m, params, big_c)
                if m <= _ORACLE_DEGREE_CAP:
                    extra = [wr.sup_location] if math.isfinite(wr.sup_location) else []
                    oracle_value = b_exact(samples, m, gs, extra_points=extra)
                else:
                    oracle_value = None
                records.append(WitnessOracleRecord(
                    m=m, n=n, seed=t, case=wr.case, lam=wr.lam,
                    witness_bound=wr.bound, b_exact=oracle_value,
                    event_holds=wr.event_holds,
                ))
    return records


def witness_oracle_csv(records: list[WitnessOracleRecord]) -> str:
    lines = [WITNESS_ORACLE_HEADER]
    for r in records:
        oracle_cell = "" if r.b_exact is None else _fmt(r.b_exact)
        lines.append(
            f"{r.m},{r.n},{r.seed},{r.case},{_fmt(r.lam)},"
            f"{_fmt(r.witness_bound)},{oracle_cell},{_fmt_bool(r.event_holds)}"
        )
    return "\n".join(lines) + "\n"
