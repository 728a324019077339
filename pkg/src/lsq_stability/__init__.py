"""Stability of discrete least-squares polynomial approximation under
random sampling from Jacobi measures.

The package computes condition numbers of the empirical Gram matrix,
certified lower bounds on the Lebesgue-type sample quantity, sufficiency
thresholds for well-conditioning, and seeded Monte Carlo maps of all of
these across sampling rates.
"""

from .bounds import (
    WitnessResult,
    cohen_iota,
    cohen_threshold,
    default_big_c,
    theoretical_exponent,
    witness_lower_bound,
)
from .conditioning import (
    LAMBDA_MIN_CLAMP,
    GramMatrix,
    condition_number,
    gram,
    least_squares_fit,
    min_eigenvalue,
    spectral_distance_to_identity,
)
from .dense import (
    LPProblem,
    LPResult,
    chebyshev_grid,
    gauss_jacobi_nodes,
    lp_maximize,
    symmetric_eigen,
)
from .errors import ContractError, DomainError, LsqStabilityError, RankDeficiencyError
from .experiments import (
    ExperimentConfig,
    StabilityRecord,
    cohen_sufficiency_experiment,
    convergence_experiment,
    orderstat_probability,
    runge,
    stability_map,
    witness_vs_oracle,
)
from .jacobi import (
    JacobiParams,
    OrthonormalBasis,
    christoffel_k,
    endpoint_sup,
    eval_basis,
    make_params,
    orthonormal_basis,
    squared_norm,
    weight,
)
from .oracle import b_exact, d_random_check, lebesgue_max
from .sampling import (
    SampleSet,
    cdf,
    derived_rng,
    equidistributed,
    equispaced,
    orderstat_event,
    sample_iid,
    sort_samples,
)

__version__ = "0.1.0"
