"""Extreme-value-theory estimation and confidence intervals for symmetric
Levy-stable distributions."""

from .confidence import (
    ConfidenceInterval,
    ci_alpha,
    ci_location,
    ci_scale,
    gaussian_quantile,
)
from .errors import (
    DegenerateSampleError,
    DomainError,
    EstimationError,
    InfiniteMeanError,
    QuadratureError,
    SelectionError,
    SingularityError,
    SummaryError,
    UnboundedIntervalError,
)
from .estimators import (
    SortedSample,
    TailIndexEstimate,
    delta_factor,
    hill_tail,
    peng_location,
    scale_estimate,
    tau_factor,
)
from .rng import RandomStream
from .selection import (
    KSelection,
    default_k_bounds,
    hill_trajectory,
    rt_statistic,
    select_k_star,
)
from .simulation import (
    ExperimentConfig,
    ReplicationResult,
    SummaryRow,
    density_figure_data,
    hill_plot_data,
    run_experiment,
    run_replication,
    summarize,
)
from .stable import StableParams, c_alpha, density, sample_symmetric, symmetric_cf

__version__ = "0.1.0"
