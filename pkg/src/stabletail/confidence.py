"""Asymptotic confidence intervals for the stable parameters.

All three intervals come from the asymptotic normality of the point
estimators, centered at the estimates (no second-order bias correction).
"""

from __future__ import annotations

import dataclasses
import math

from scipy.stats import norm

from .errors import DomainError, UnboundedIntervalError

__all__ = ["ConfidenceInterval", "gaussian_quantile", "ci_alpha", "ci_location", "ci_scale"]


@dataclasses.dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    level: float
    target: str  # alpha | mu | sigma

    def __post_init__(self):
        if not 0.0 < self.level < 1.0:
            raise DomainError(f"level must lie in (0, 1), got {self.level}")
        if self.target not in ("alpha", "mu", "sigma"):
            raise DomainError(f"unknown target {self.target!r}")
        if math.isfinite(self.lower) and math.isfinite(self.upper) \
                and self.lower > self.upper:
            raise DomainError("interval endpoints out of order")

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    @property
    def length(self) -> float:
        return self.upper - self.lower


def gaussian_quantile(p: float) -> float:
    """Standard normal quantile: z with Phi(z) = p."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"quantile probability must lie in (0, 1), got {p}")
    return float(norm.ppf(p))


def _half_z(level: float) -> float:
    if not 0.0 < level < 1.0:
        raise DomainError(f"level must lie in (0, 1), got {level}")
    return gaussian_quantile(0.5 + level / 2.0)


def ci_alpha(alpha_star: float, k_star: int, level: float) -> ConfidenceInterval:
    """Stability-index interval (a*/(1 + z/sqrt(k*)), a*/(1 - z/sqrt(k*)))."""
    if k_star < 1:
        raise DomainError(f"k_star must be >= 1, got {k_star}")
    if alpha_star <= 0.0:
        raise DomainError(f"alpha_star must be positive, got {alpha_star}")
    z = _half_z(level)
    r = z / math.sqrt(k_star)
    if 1.0 - r <= 0.0:
        raise UnboundedIntervalError(
            f"k_star={k_star} too small for level {level}: z/sqrt(k*) >= 1")
    return ConfidenceInterval(alpha_star / (1.0 + r), alpha_star / (1.0 - r),
                              level, "alpha")


def ci_location(mu_star: float, delta_star: float, tau_star: float,
                n: int, level: float) -> ConfidenceInterval:
    """Location interval mu* -+ z * delta* tau* / sqrt(n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (delta_star > 0.0 and math.isfinite(delta_star)):
        raise DomainError(f"delta_star must be positive finite, got {delta_star}")
    if not (tau_star > 0.0 and math.isfinite(tau_star)):
        raise DomainError(f"tau_star must be positive finite, got {tau_star}")
    half = _half_z(level) * delta_star * tau_star / math.sqrt(n)
    return ConfidenceInterval(mu_star - half, mu_star + half, level, "mu")


def ci_scale(sigma_star: float, alpha_star: float, k_star: int,
             n: int, level: float) -> ConfidenceInterval:
    """Scale interval exp{log sigma* -+ z |log(k*/n)| / (alpha* sqrt(k*))}.

    Endpoints are log-symmetric about sigma*: lower * upper = sigma*^2.
    """
    if not 1 <= k_star < n:
        raise DomainError(f"need 1 <= k_star < n, got k_star={k_star}, n={n}")
    if sigma_star <= 0.0 or alpha_star <= 0.0:
        raise DomainError("sigma_star and alpha_star must be positive")
    z = _half_z(level)
    shift = z * math.log(k_star / n) / (alpha_star * math.sqrt(k_star))  # < 0
    log_s = math.log(sigma_star)
    return ConfidenceInterval(math.exp(log_s + shift), math.exp(log_s - shift),
                              level, "sigma")
