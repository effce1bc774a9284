"""Optimal sample-fraction selection from the Hill trajectory.

The number k* of upper order statistics is chosen by minimizing the
weighted mean absolute deviation of the Hill trajectory from its running
median (the RT stability statistic).
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .errors import DegenerateSampleError, DomainError, SelectionError
from .estimators import SortedSample

__all__ = ["KSelection", "default_k_bounds", "hill_trajectory", "rt_statistic",
           "select_k_star"]


def default_k_bounds(n: int) -> tuple[int, int]:
    """Default search range [0.03 n, 0.1 n] for the sample-fraction choice.

    Tiny k gives noise-dominated Hill values; beyond a tenth of the sample
    the Pareto tail approximation no longer holds and the stability
    statistic rewards the flat, heavily biased region.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    k_min = max(1, round(0.03 * n))
    k_max = max(k_min, min(round(0.1 * n), n - 1))
    return k_min, k_max


@dataclasses.dataclass(frozen=True)
class KSelection:
    """RT trajectory over [k_min, k_max] and the selected minimizer k*."""

    theta: float
    k_min: int
    k_max: int
    rt_values: np.ndarray  # RT(k) for k = k_min..k_max; NaN where skipped
    k_star: int

    def rt_at(self, k: int) -> float:
        if not self.k_min <= k <= self.k_max:
            raise DomainError(f"k={k} outside [{self.k_min}, {self.k_max}]")
        return float(self.rt_values[k - self.k_min])


def hill_trajectory(magnitudes: SortedSample, k_max: int) -> np.ndarray:
    """Hill estimates alpha_hat(i) for i = 1..k_max in O(n) total.

    Entry i equals hill_tail(magnitudes, i).alpha_hat; degenerate spacings
    (ties at the threshold) are marked NaN instead of raising.
    """
    n = magnitudes.n
    if not 1 <= k_max <= n - 1:
        raise DomainError(f"k_max must satisfy 1 <= k_max <= n-1 = {n - 1}, got {k_max}")
    top = magnitudes.values[n - k_max - 1:]  # k_max + 1 largest, ascending
    if top[0] <= 0.0:
        raise DomainError("top k_max + 1 magnitudes must be strictly positive")
    logs = np.log(top[::-1])                 # descending
    excess = np.cumsum(logs[:k_max]) / np.arange(1, k_max + 1) - logs[1:k_max + 1]
    with np.errstate(divide="ignore"):
        traj = np.where(excess > 0.0, 1.0 / np.where(excess > 0.0, excess, 1.0), np.nan)
    return traj


def rt_statistic(trajectory: np.ndarray, k: int, theta: float) -> float:
    """RT(k) = (1/k) sum_{i=1}^{k} i^theta |alpha_hat(i) - med(alpha_hat(1..k))|."""
    trajectory = np.asarray(trajectory, dtype=float)
    if not 1 <= k <= trajectory.size:
        raise DomainError(f"k={k} outside 1..{trajectory.size}")
    head = trajectory[:k]
    if not np.all(np.isfinite(head)):
        raise DegenerateSampleError(f"non-finite Hill values among the first {k}")
    med = float(np.median(head))
    weights = np.arange(1, k + 1, dtype=float) ** theta
    return float(np.sum(weights * np.abs(head - med)) / k)


def select_k_star(trajectory: np.ndarray, theta: float = 0.3,
                  k_min: int = 1, k_max: int | None = None) -> KSelection:
    """Smallest k in [k_min, k_max] minimizing RT(k).

    k with non-finite Hill values inside [1, k] are skipped; ties in the
    minimum are broken toward the smallest k.
    """
    trajectory = np.asarray(trajectory, dtype=float)
    if k_max is None:
        k_max = trajectory.size
    if not (0.0 <= theta <= 0.5):
        raise DomainError(f"theta must lie in [0, 0.5], got {theta}")
    if not 1 <= k_min <= k_max <= trajectory.size:
        raise DomainError(
            f"need 1 <= k_min <= k_max <= {trajectory.size}, got [{k_min}, {k_max}]")

    finite = np.isfinite(trajectory)
    bad = np.flatnonzero(~finite)
    # a non-finite entry at index j poisons every k >= j + 1
    cutoff = int(bad[0]) if bad.size else k_max
    rt = np.full(k_max - k_min + 1, np.nan)
    k_star = None
    best = np.inf
    for k in range(k_min, min(k_max, cutoff) + 1):
        val = rt_statistic(trajectory, k, theta)
        rt[k - k_min] = val
        if val < best:
            best = val
            k_star = k
    if k_star is None:
        raise SelectionError("every k in the search range is degenerate")
    return KSelection(theta, k_min, k_max, rt, k_star)
