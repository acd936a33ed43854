"""Model parameters, derived time scales, and thermodynamics.

A particle of mass m confined to a circle of radius R at inverse
temperature beta has level energies n^2 hbar^2/(2 m R^2).  Two time
scales govern the correlation functions: the thermal time tau_a =
hbar beta and the recurrence scale tau_b = m R^2/hbar.  Their ratio
alpha = tau_a/tau_b fixes every dimensionless property; their product
beta m R^2 is independent of hbar.
"""

import math
from dataclasses import dataclass

from ringcorr.errors import BracketingError, TermCapError
from ringcorr.theta import SELF_DUAL_ALPHA

_DEFAULT_MAX_TERMS = 10_000_000
_BISECTION_CAP = 200


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs in one consistent unit system."""

    mass: float
    radius: float
    hbar: float
    beta: float

    def __post_init__(self):
        for field in ("mass", "radius", "hbar", "beta"):
            v = getattr(self, field)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"{field} must be positive and finite, got {v!r}")

    @property
    def energy_scale(self):
        """Level-spacing scale hbar^2/(2 m R^2); level n sits at n^2 times it."""
        return self.hbar * self.hbar / (2.0 * self.mass * self.radius * self.radius)


@dataclass(frozen=True)
class TimeScales:
    tau_a: float
    tau_b: float
    alpha: float
    period: float


def derive_scales(params):
    """Thermal time, recurrence scale, their ratio, and the exact period."""
    tau_a = params.hbar * params.beta
    tau_b = params.mass * params.radius * params.radius / params.hbar
    return TimeScales(
        tau_a=tau_a,
        tau_b=tau_b,
        alpha=tau_a / tau_b,
        period=4.0 * math.pi * tau_b,
    )


def partition_sum(alpha, eps=1e-12, max_terms=_DEFAULT_MAX_TERMS):
    """Canonical partition sum sum_n exp(-alpha n^2/2), direct summation.

    eps bounds the absolute truncation error.  The result is at least 1.
    """
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"alpha must be positive and finite, got {alpha!r}")
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    total = 1.0
    n = 0
    while True:
        n += 1
        if 2 * n + 1 > max_terms:
            raise TermCapError(max_terms, "partition sum")
        pair = 2.0 * math.exp(-0.5 * alpha * n * n)
        total += pair
        r = math.exp(-alpha * (n + 0.5))
        if pair * r <= eps * (1.0 - r):
            return total


def mean_energy(params, eps=1e-12):
    """Thermal mean energy, relative truncation error at most eps.

    Below the self-dual point the spectral sums converge slowly, so the
    dual form E = e0 (1/alpha - (4 pi^2/alpha^2) s2/s0) built from comb
    weights exp(-2 pi^2 n^2/alpha) is used there; the two branches agree
    to within eps at the crossover.
    """
    scales = derive_scales(params)
    alpha = scales.alpha
    e0 = params.energy_scale
    tol = 0.25 * eps

    if alpha >= SELF_DUAL_ALPHA:
        den = 1.0
        num = 0.0
        n = 0
        while True:
            n += 1
            if 2 * n + 1 > _DEFAULT_MAX_TERMS:
                raise TermCapError(_DEFAULT_MAX_TERMS, "spectral sums")
            t = math.exp(-0.5 * alpha * n * n)
            den += 2.0 * t
            num += 2.0 * n * n * t
            ratio = ((n + 1.0) / n) ** 2 * math.exp(-alpha * (n + 0.5))
            if ratio < 1.0:
                tail_num = 2.0 * n * n * t * ratio / (1.0 - ratio)
                tail_den = 2.0 * t * ratio / (1.0 - ratio)
                if tail_num <= tol * num and tail_den <= tol * den:
                    return e0 * num / den

    s0 = 1.0
    s2 = 0.0
    w = 2.0 * math.pi * math.pi / alpha
    n = 0
    while True:
        n += 1
        if 2 * n + 1 > _DEFAULT_MAX_TERMS:
            raise TermCapError(_DEFAULT_MAX_TERMS, "comb weight sums")
        t = math.exp(-w * n * n)
        s0 += 2.0 * t
        s2 += 2.0 * n * n * t
        ratio = ((n + 1.0) / n) ** 2 * math.exp(-w * (2.0 * n + 1.0))
        if ratio < 1.0:
            tail_s2 = 2.0 * n * n * t * ratio / (1.0 - ratio)
            tail_s0 = 2.0 * t * ratio / (1.0 - ratio)
            if tail_s2 <= tol * max(s2, 1e-300) and tail_s0 <= tol * s0:
                return e0 * (1.0 / alpha - (2.0 * w / alpha) * (s2 / s0))


def beta_from_energy(mass, radius, hbar, target_energy, eps=1e-12):
    """Invert the mean energy for beta by bisection on log beta.

    The mean energy decreases strictly with beta, so a sign change over
    the bracket pins the root.  Raises BracketingError with the last
    bracket when the target is unattainable or the iteration cap is hit.
    """
    if not (math.isfinite(target_energy) and target_energy > 0.0):
        raise ValueError(f"target energy must be positive and finite, got {target_energy!r}")
    e0 = hbar * hbar / (2.0 * mass * radius * radius)
    lo = 1e-12 / e0
    hi = 1e12 / e0

    def residual(beta):
        return mean_energy(ModelParams(mass, radius, hbar, beta), eps=0.1 * eps) - target_energy

    if residual(lo) < 0.0 or residual(hi) > 0.0:
        raise BracketingError("target energy outside the attainable range", (lo, hi))
    log_lo = math.log(lo)
    log_hi = math.log(hi)
    width_goal = max(eps, 1e-12)
    for _ in range(_BISECTION_CAP):
        log_mid = 0.5 * (log_lo + log_hi)
        mid = math.exp(log_mid)
        f = residual(mid)
        if abs(f) <= eps * target_energy and log_hi - log_lo <= width_goal:
            return mid
        if f > 0.0:
            log_lo = log_mid
        else:
            log_hi = log_mid
    raise BracketingError(
        "no convergence within the bisection cap",
        (math.exp(log_lo), math.exp(log_hi)),
    )
