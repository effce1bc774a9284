"""Monte Carlo harness: replicated sampling, estimation at the selected
sample fraction, interval construction, and table/figure aggregation.

Each replication draws from the child stream (master seed, index), so the
experiment is a pure function of its configuration regardless of how the
replications are scheduled.  Estimation failures inside a replication are
recorded as typed flags, never raised.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .confidence import ConfidenceInterval, ci_alpha, ci_location, ci_scale
from .errors import DomainError, EstimationError, SummaryError
from .estimators import (
    SortedSample,
    delta_factor,
    peng_location,
    scale_estimate,
    tau_factor,
)
from .rng import RandomStream
from .selection import default_k_bounds, hill_trajectory, select_k_star
from .stable import StableParams, density, sample_symmetric

__all__ = [
    "ExperimentConfig",
    "ReplicationResult",
    "SummaryRow",
    "run_replication",
    "run_experiment",
    "summarize",
    "hill_plot_data",
    "density_figure_data",
]

TARGETS = ("alpha", "mu", "sigma")


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one Monte Carlo experiment."""

    params: StableParams
    n: int = 3000
    reps: int = 1000
    level: float = 0.95
    theta: float = 0.3
    k_min: int | None = None  # defaults to the 3%/10% window of n
    k_max: int | None = None
    master_seed: int = 0
    targets: tuple[str, ...] = TARGETS

    def __post_init__(self):
        if self.reps < 1:
            raise DomainError(f"reps must be >= 1, got {self.reps}")
        if self.n < 10:
            raise DomainError(f"n must be >= 10, got {self.n}")
        for t in self.targets:
            if t not in TARGETS:
                raise DomainError(f"unknown target {t!r}")

    @property
    def k_bounds(self) -> tuple[int, int]:
        lo, hi = default_k_bounds(self.n)
        if self.k_min is not None:
            lo = self.k_min
        if self.k_max is not None:
            hi = min(self.k_max, self.n - 1)
        return lo, hi


@dataclasses.dataclass(frozen=True)
class ReplicationResult:
    """Estimates, intervals and failure flags of a single replication."""

    index: int
    k_star: int | None
    alpha_hat: float | None = None
    mu_hat: float | None = None
    sigma_hat: float | None = None
    ci_alpha: ConfidenceInterval | None = None
    ci_mu: ConfidenceInterval | None = None
    ci_sigma: ConfidenceInterval | None = None
    failure_flags: dict = dataclasses.field(default_factory=dict)

    def estimate(self, target: str) -> float | None:
        return {"alpha": self.alpha_hat, "mu": self.mu_hat, "sigma": self.sigma_hat}[target]

    def interval(self, target: str) -> ConfidenceInterval | None:
        return {"alpha": self.ci_alpha, "mu": self.ci_mu, "sigma": self.ci_sigma}[target]


@dataclasses.dataclass(frozen=True)
class SummaryRow:
    """One table row aggregated over the valid replications of a target."""

    target: str
    true_value: float
    mean_estimate: float
    abs_bias: float
    mse: float
    avg_ci: tuple[float, float]
    length: float
    cov_prob: float
    valid_reps: int


def run_replication(config: ExperimentConfig, index: int) -> ReplicationResult:
    """One draw-estimate-interval pass on the child stream (seed, index)."""
    if not 0 <= index < config.reps:
        raise DomainError(f"replication index {index} outside [0, {config.reps})")
    stream = RandomStream(config.master_seed, index)
    x = sample_symmetric(config.params, config.n, stream)
    xs = SortedSample(x)
    zs = xs.magnitudes()
    n = config.n
    flags: dict[str, str] = {}

    k_min, k_max = config.k_bounds
    try:
        traj = hill_trajectory(zs, k_max)
        sel = select_k_star(traj, config.theta, k_min, k_max)
    except EstimationError as err:
        return ReplicationResult(index, None,
                                 failure_flags={t: err.tag for t in config.targets})
    k = sel.k_star
    alpha_hat = float(traj[k - 1])

    fields: dict[str, object] = {}
    if "alpha" in config.targets:
        try:
            fields["ci_alpha"] = ci_alpha(alpha_hat, k, config.level)
            fields["alpha_hat"] = alpha_hat
        except EstimationError as err:
            flags["alpha"] = err.tag
    if "sigma" in config.targets:
        try:
            sigma_hat = scale_estimate(zs.order(n - k), k, n, alpha_hat)
            fields["ci_sigma"] = ci_scale(sigma_hat, alpha_hat, k, n, config.level)
            fields["sigma_hat"] = sigma_hat
        except EstimationError as err:
            flags["sigma"] = err.tag
    if "mu" in config.targets:
        try:
            mu_hat = peng_location(xs, k)
            delta = delta_factor(alpha_hat)
            tau = tau_factor(xs.order(k), k, n, alpha_hat)
            fields["ci_mu"] = ci_location(mu_hat, delta, tau, n, config.level)
            fields["mu_hat"] = mu_hat
        except EstimationError as err:
            flags["mu"] = err.tag
    return ReplicationResult(index, k, failure_flags=flags, **fields)


def _run_chunk(config: ExperimentConfig, indices) -> list[ReplicationResult]:
    return [run_replication(config, i) for i in indices]


def run_experiment(config: ExperimentConfig, workers: int = 1) -> list[ReplicationResult]:
    """All replications 0..reps-1; identical output for any worker count."""
    indices = range(config.reps)
    if workers <= 1 or config.reps == 1:
        return _run_chunk(config, indices)
    chunks = np.array_split(np.asarray(indices), min(workers, config.reps))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_run_chunk, [config] * len(chunks), chunks)
    results = [r for part in parts for r in part]
    results.sort(key=lambda r: r.index)
    return results


def _true_value(truth: StableParams, target: str) -> float:
    return {"alpha": truth.alpha, "mu": truth.mu, "sigma": truth.sigma}[target]


def summarize(results, truth: StableParams, target: str) -> SummaryRow:
    """Aggregate the valid replications of one target into a table row."""
    if target not in TARGETS:
        raise DomainError(f"unknown target {target!r}")
    true = _true_value(truth, target)
    estimates, lowers, uppers, covered = [], [], [], 0
    for r in results:
        est = r.estimate(target)
        ci = r.interval(target)
        if est is None or ci is None:
            continue
        estimates.append(est)
        lowers.append(ci.lower)
        uppers.append(ci.upper)
        covered += ci.contains(true)
    if not estimates:
        raise SummaryError(f"no valid replication for target {target!r}")
    est = np.asarray(estimates)
    avg_lo = float(np.mean(lowers))
    avg_up = float(np.mean(uppers))
    return SummaryRow(
        target=target,
        true_value=true,
        mean_estimate=float(np.mean(est)),
        abs_bias=abs(float(np.mean(est)) - true),
        mse=float(np.mean((est - true) ** 2)),
        avg_ci=(avg_lo, avg_up),
        length=avg_up - avg_lo,
        cov_prob=covered / len(estimates),
        valid_reps=len(estimates),
    )


def hill_plot_data(params: StableParams, n: int, k_max: int, seed: int) -> np.ndarray:
    """Hill trajectory of one fixed-seed sample, as rows (k, alpha_hat, true alpha)."""
    if n < k_max + 1:
        raise DomainError(f"need n >= k_max + 1, got n={n}, k_max={k_max}")
    stream = RandomStream(seed, 0)
    zs = SortedSample(sample_symmetric(params, n, stream)).magnitudes()
    traj = hill_trajectory(zs, k_max)
    ks = np.arange(1, k_max + 1, dtype=float)
    return np.column_stack([ks, traj, np.full(k_max, params.alpha)])


def density_figure_data(alphas, grid) -> np.ndarray:
    """Standardized densities (sigma=1, mu=0) on a grid, rows (x, alpha, f(x))."""
    grid = np.asarray(grid, dtype=float)
    rows = []
    for alpha in alphas:
        if not 0.3 < alpha <= 2.0:
            raise DomainError(f"density figure supports alpha in (0.3, 2], got {alpha}")
        params = StableParams(alpha=alpha)
        for x in grid:
            rows.append((float(x), float(alpha), density(params, float(x))))
    return np.asarray(rows)
