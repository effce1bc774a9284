"""Point estimators for the stable parameters from order statistics.

Hill's estimator for the stability index, Peng's three-component estimator
for the location, the tail-based scale estimator, and the two plug-in
factors (delta, tau) entering the location interval.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
from scipy.special import gamma as _gamma

from .errors import (
    DegenerateSampleError,
    DomainError,
    InfiniteMeanError,
    SingularityError,
)

__all__ = [
    "SortedSample",
    "TailIndexEstimate",
    "hill_tail",
    "peng_location",
    "scale_estimate",
    "delta_factor",
    "tau_factor",
]


class SortedSample:
    """Immutable ascending order statistics of a data vector.

    ``order(i)`` returns the i-th order statistic X_{i:n} (1-based).
    """

    __slots__ = ("values", "n")

    def __init__(self, data):
        arr = np.sort(np.asarray(data, dtype=float))
        if arr.ndim != 1 or arr.size < 1:
            raise DomainError("sample must be a non-empty 1-d vector")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample contains non-finite values")
        arr.flags.writeable = False
        self.values = arr
        self.n = int(arr.size)

    def order(self, i: int) -> float:
        if not 1 <= i <= self.n:
            raise DomainError(f"order statistic index {i} outside 1..{self.n}")
        return float(self.values[i - 1])

    def magnitudes(self) -> "SortedSample":
        """Sorted absolute values |X|_{1:n} <= ... <= |X|_{n:n}."""
        return SortedSample(np.abs(self.values))

    def __len__(self):
        return self.n


@dataclasses.dataclass(frozen=True)
class TailIndexEstimate:
    """A Hill-type tail-index estimate together with its sample fraction."""

    alpha_hat: float
    k: int
    variant: str = "absolute"  # absolute | upper | lower

    def __post_init__(self):
        if not (self.alpha_hat > 0 and math.isfinite(self.alpha_hat)):
            raise DomainError(f"alpha_hat must be positive finite, got {self.alpha_hat}")
        if self.variant not in ("absolute", "upper", "lower"):
            raise DomainError(f"unknown variant {self.variant!r}")


def _mean_log_excess(top: np.ndarray, threshold: float) -> float:
    """Mean of log(top_i) - log(threshold) over the supplied extremes."""
    if threshold <= 0.0 or top[0] <= 0.0:
        raise DomainError("Hill estimation needs strictly positive extremes")
    excess = float(np.mean(np.log(top))) - math.log(threshold)
    if excess <= 0.0:
        raise DegenerateSampleError("zero log-spacings: ties at the threshold")
    return excess


def hill_tail(magnitudes: SortedSample, k: int, variant: str = "absolute") -> TailIndexEstimate:
    """Hill's estimator on the k largest magnitudes.

    alpha_hat = ( (1/k) sum_{i=1}^{k} log M_{n-i+1:n} - log M_{n-k:n} )^{-1},
    thresholded at the (k+1)-th largest magnitude.
    """
    n = magnitudes.n
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got {k}")
    v = magnitudes.values
    excess = _mean_log_excess(v[n - k:], v[n - k - 1])
    return TailIndexEstimate(1.0 / excess, k, variant)


def _one_sided_hill(tail_mags: np.ndarray, k: int, literal: bool) -> float:
    """Tail index from the k largest one-sided magnitudes (descending order).

    ``literal`` thresholds at the k-th largest magnitude, reproducing the
    printed lower-tail estimator in which the i = k term vanishes; otherwise
    the usual (k+1)-th largest threshold is used (one more spacing).
    """
    if literal:
        excess = _mean_log_excess(tail_mags[:k], tail_mags[k - 1])
    else:
        if len(tail_mags) < k + 1:
            raise DomainError("not enough one-sided observations for the k+1 threshold")
        excess = _mean_log_excess(tail_mags[:k], tail_mags[k])
    return 1.0 / excess


def peng_location(sample: SortedSample, k: int, convention: str = "matched") -> float:
    """Peng's location estimator mu1 + mu2 + mu3 at sample fraction k.

    mu2 is the trimmed mean over X_{k+1:n}..X_{n-k:n}; mu1 and mu3 put the
    discarded tail mass back using one-sided tail-index estimates:

        mu1 = (k/n) X_{k:n}     a1/(a1 - 1),
        mu3 = (k/n) X_{n-k+1:n} a3/(a3 - 1).

    ``convention`` fixes the one-sided Hill threshold: "matched" (default)
    thresholds both tails at their k-th largest magnitude, which makes the
    estimator vanish exactly on antisymmetric samples; "hill" uses the
    (k+1)-th largest on both sides.
    """
    if convention not in ("matched", "hill"):
        raise DomainError(f"unknown convention {convention!r}")
    x = sample.values
    n = sample.n
    if not (k >= 1 and 2 * k < n):
        raise DomainError(f"need 1 <= k and 2k < n, got k={k}, n={n}")
    if not (x[k - 1] < 0.0 < x[n - k - 1]):
        raise DomainError("both tails must be populated: X_{k:n} < 0 < X_{n-k:n}")

    literal = convention == "matched"
    m = k if literal else k + 1
    if not literal and not (x[k] < 0.0 < x[n - k - 2]):
        raise DomainError("hill convention needs one extra observation in each tail")
    lower_desc = -x[:m]             # -X_{1:n} >= ... >= -X_{m:n}
    upper_desc = x[n - m:][::-1]    # X_{n:n} >= ... >= X_{n-m+1:n}
    a1 = _one_sided_hill(lower_desc, k, literal)
    a3 = _one_sided_hill(upper_desc, k, literal)
    if a1 <= 1.0 or a3 <= 1.0:
        raise InfiniteMeanError(
            f"tail-index estimates a1={a1:.4f}, a3={a3:.4f} not both > 1")

    mu2 = float(np.sum(x[k:n - k])) / n
    mu1 = (k / n) * x[k - 1] * a1 / (a1 - 1.0)
    mu3 = (k / n) * x[n - k] * a3 / (a3 - 1.0)
    return float(mu1 + mu2 + mu3)


def scale_estimate(threshold: float, k: int, n: int, alpha_hat: float) -> float:
    """Scale estimate sigma_hat = Z_{n-k:n} * (k pi / (2 n Gamma(a) sin(pi a / 2)))^(1/a)."""
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got k={k}, n={n}")
    if threshold <= 0.0:
        raise DomainError(f"threshold must be positive, got {threshold}")
    if not (0.0 < alpha_hat < 2.0):
        raise DomainError(
            f"scale estimation requires 0 < alpha_hat < 2, got {alpha_hat}")
    corr = k * math.pi / (2.0 * n * _gamma(alpha_hat) * math.sin(math.pi * alpha_hat / 2.0))
    return float(threshold * corr ** (1.0 / alpha_hat))


def delta_factor(alpha_hat: float) -> float:
    """Asymptotic standard-deviation factor of the location estimator.

    delta^2 = 1 + (2-a)(2a^2 - 2a + 1) / (2 (a-1)^4) + (2-a)/(a-1);
    equal to 1 in the Gaussian limit a = 2.
    """
    if alpha_hat <= 1.0:
        raise SingularityError(f"delta factor is singular at alpha_hat <= 1, got {alpha_hat}")
    if alpha_hat > 2.0:
        raise DomainError(f"delta factor requires alpha_hat <= 2, got {alpha_hat}")
    a = alpha_hat
    d2 = 1.0 + ((2.0 - a) * (2.0 * a * a - 2.0 * a + 1.0)) / (2.0 * (a - 1.0) ** 4) \
        + (2.0 - a) / (a - 1.0)
    return math.sqrt(d2)


def tau_factor(lower_stat: float, k: int, n: int, alpha_hat: float) -> float:
    """Plug-in tau_hat = -2 sqrt(k/n) X_{k:n} / sqrt(2 - alpha_hat).

    ``lower_stat`` is the k-th smallest observation; it must be negative
    under the symmetric model.
    """
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got k={k}, n={n}")
    if lower_stat >= 0.0:
        raise DomainError(f"lower order statistic must be negative, got {lower_stat}")
    if not (1.0 < alpha_hat < 2.0):
        raise DomainError(f"tau factor requires 1 < alpha_hat < 2, got {alpha_hat}")
    return -2.0 * math.sqrt(k / n) * lower_stat / math.sqrt(2.0 - alpha_hat)
