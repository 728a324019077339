"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI to
emit ``error: <code>: <detail>`` diagnostics.
"""


class LsqStabilityError(Exception):
    """Base class for all package errors."""

    code = "internal"


class DomainError(LsqStabilityError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    code = "domain"


class ContractError(LsqStabilityError, ValueError):
    """A structural precondition (sortedness, symmetry, shape) was violated."""

    code = "contract"


class RankDeficiencyError(LsqStabilityError, ValueError):
    """Too few distinct sample points for the requested polynomial degree."""

    code = "rank"
