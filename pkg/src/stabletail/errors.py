"""Typed errors raised by the estimators and the simulation harness.

Estimation failures are ordinary data for the Monte Carlo harness: every
exception carries a short machine-readable ``tag`` so invalid replications
can be counted without string matching.
"""


class EstimationError(Exception):
    """Base class for all estimation/selection failures."""

    tag = "estimation"


class DomainError(EstimationError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""

    tag = "domain"


class SingularityError(DomainError):
    """The formula is singular at the given argument (e.g. alpha = 1)."""

    tag = "singularity"


class InfiniteMeanError(EstimationError):
    """A tail-index estimate <= 1 makes the mean-correction weight undefined."""

    tag = "infinite_mean"


class DegenerateSampleError(EstimationError):
    """Tied order statistics produce zero log-spacings."""

    tag = "degenerate_sample"


class UnboundedIntervalError(EstimationError):
    """The requested confidence level gives an unbounded interval."""

    tag = "unbounded_interval"


class SelectionError(EstimationError):
    """No admissible k in the search range for the sample-fraction choice."""

    tag = "selection"


class SummaryError(EstimationError):
    """No valid replication is available for the requested summary."""

    tag = "summary"


class QuadratureError(EstimationError):
    """Numerical quadrature failed to reach the requested tolerance."""

    tag = "quadrature"
