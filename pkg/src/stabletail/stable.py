"""Symmetric alpha-stable laws: parameters, sampling, characteristic
function, density and the Pareto tail constant.

Only the symmetric case (skewness 0) is covered; the distribution is then
symmetric about its location and the characteristic function reduces to
exp(-scale^alpha * |t|^alpha + i * location * t).
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
from scipy import integrate

from .errors import DomainError, QuadratureError
from .rng import RandomStream

__all__ = ["StableParams", "c_alpha", "sample_symmetric", "symmetric_cf", "density"]


@dataclasses.dataclass(frozen=True)
class StableParams:
    """Parameter quadruple of a symmetric stable law S_alpha(sigma, 0, mu).

    alpha in (0, 2] is the stability index, sigma > 0 the scale, mu the
    location.  beta is pinned at 0: both tails carry mass fraction 1/2.
    """

    alpha: float
    sigma: float = 1.0
    mu: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.alpha <= 2.0):
            raise DomainError(f"alpha must lie in (0, 2], got {self.alpha}")
        if not self.sigma > 0.0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if self.beta != 0.0:
            raise DomainError("only the symmetric case beta = 0 is supported")

    @property
    def tail_balance(self) -> tuple[float, float]:
        """Limiting upper/lower tail mass split (p, q); 1/2 each by symmetry."""
        return (0.5, 0.5)


def c_alpha(alpha: float) -> float:
    """Pareto tail constant (2/pi) * Gamma(alpha) * sin(pi*alpha/2).

    x^alpha * P(|X| > x) -> c_alpha(alpha) * sigma^alpha as x -> inf for a
    stable law with index alpha in (0, 2).
    """
    if not (0.0 < alpha < 2.0):
        raise DomainError(f"tail constant requires 0 < alpha < 2, got {alpha}")
    return (2.0 / math.pi) * math.gamma(alpha) * math.sin(math.pi * alpha / 2.0)


def sample_symmetric(params: StableParams, n: int, stream: RandomStream) -> np.ndarray:
    """Draw n iid variates from S_alpha(sigma, 0, mu).

    Uses the exact trigonometric construction: with U uniform on
    (-pi/2, pi/2) and W standard exponential,

        X = sin(alpha*U) / cos(U)^(1/alpha)
            * (cos((1-alpha)*U) / W)^((1-alpha)/alpha),

    which at alpha = 1 reduces to tan(U) (Cauchy) and at alpha = 2 yields
    Normal(0, 2).  The output is a pure function of (params, n, stream).
    """
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    alpha = params.alpha
    out = np.empty(n)
    filled = 0
    while filled < n:
        m = n - filled
        u = stream.uniform(-math.pi / 2.0, math.pi / 2.0, size=m)
        w = stream.exponential(size=m)
        if alpha == 1.0:
            z = np.tan(u)
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                z = (np.sin(alpha * u) / np.cos(u) ** (1.0 / alpha)
                     * (np.cos((1.0 - alpha) * u) / w) ** ((1.0 - alpha) / alpha))
        good = np.isfinite(z)
        # W = 0 draws (or underflow) are regenerated rather than propagated
        k = int(good.sum())
        out[filled:filled + k] = z[good]
        filled += k
    return params.mu + params.sigma * out


def symmetric_cf(params: StableParams, t) -> complex | np.ndarray:
    """Characteristic function exp(-sigma^alpha |t|^alpha + i mu t)."""
    t = np.asarray(t, dtype=float)
    mod = np.exp(-(params.sigma ** params.alpha) * np.abs(t) ** params.alpha)
    val = mod * (np.cos(params.mu * t) + 1j * np.sin(params.mu * t))
    if val.ndim == 0:
        return complex(val)
    return val


def _cos_transform(decay, x: float, upper: float, tol: float) -> float:
    result = integrate.quad(decay, 0.0, upper, weight="cos", wvar=x,
                            epsabs=tol, epsrel=0.0, limit=500, full_output=1)
    if len(result) > 3:
        raise QuadratureError(f"density quadrature failed: {result[3]}")
    return result[0]


def density(params: StableParams, x: float, tol: float = 1e-8) -> float:
    """Density of S_alpha(sigma, 0, mu) by Fourier cosine inversion.

    f(x) = (1/pi) * int_0^inf exp(-(sigma t)^alpha) cos(t (x - mu)) dt,
    truncated where the envelope drops below 1e-14 and evaluated by
    adaptive quadrature with absolute tolerance ``tol``.
    """
    alpha, sigma = params.alpha, params.sigma
    # envelope exp(-(sigma T)^alpha) < 1e-14 beyond the truncation point
    upper = (14.0 * math.log(10.0)) ** (1.0 / alpha) / sigma
    shift = abs(float(x) - params.mu)  # even in x - mu: symmetry is exact

    def decay(t):
        return math.exp(-((sigma * t) ** alpha))

    val = _cos_transform(decay, shift, upper, tol) / math.pi
    return max(val, 0.0)
