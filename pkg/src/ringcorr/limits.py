"""Classical-limit scans: quantum minus classical as hbar shrinks.

With beta m R^2 held fixed, shrinking hbar collapses alpha quadratically
and the quantum correlator approaches the classical Gaussian; the
leftover deviation is dominated by the half-quantum phase and therefore
falls off linearly in hbar.
"""

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from ringcorr.classical import c1_classical
from ringcorr.model import ModelParams, derive_scales
from ringcorr.quantum import c1
from ringcorr.theta import DEFAULT_POLICY, Representation


@dataclass(frozen=True)
class LimitRow:
    hbar: float
    alpha: float
    sup_deviation: float
    grid_span: float


def default_time_grid(mass, radius, beta, points=61, span=3.0):
    """Grid over [0, span * sqrt(beta m) R], the classical decay window."""
    width = radius * math.sqrt(beta * mass)
    return np.linspace(0.0, span * width, points)


def classical_limit_scan(mass, radius, beta, hbar_values, t_grid, policy=DEFAULT_POLICY):
    """Sup-norm deviation |C1 - C1_cl| over the grid, one row per hbar.

    The comb representation is forced: it is the only one whose term
    count stays bounded as alpha collapses toward zero.
    """
    hbar_values = [float(h) for h in hbar_values]
    if not hbar_values:
        raise ValueError("need at least one hbar value")
    if any(not (math.isfinite(h) and h > 0.0) for h in hbar_values):
        raise ValueError("hbar values must be positive and finite")
    grid = [float(t) for t in t_grid]
    comb_policy = replace(policy, representation=Representation.POISSON)
    span = grid[-1] - grid[0] if grid else 0.0
    rows = []
    for h in hbar_values:
        params = ModelParams(mass=mass, radius=radius, hbar=h, beta=beta)
        sup = max(
            abs(c1(params, t, comb_policy) - c1_classical(params, t)) for t in grid
        )
        rows.append(
            LimitRow(
                hbar=h,
                alpha=derive_scales(params).alpha,
                sup_deviation=sup,
                grid_span=span,
            )
        )
    return rows


def deviation_order(rows):
    """Least-squares slope of log sup-deviation against log hbar."""
    if len(rows) < 3:
        raise ValueError(f"need at least 3 rows for a slope, got {len(rows)}")
    if any(row.sup_deviation <= 0.0 for row in rows):
        raise ValueError("sup deviations must be positive for a log-log fit")
    log_h = np.log([row.hbar for row in rows])
    if np.ptp(log_h) == 0.0:
        raise ValueError("identical hbar values give a degenerate fit")
    log_d = np.log([row.sup_deviation for row in rows])
    return float(np.polyfit(log_h, log_d, 1)[0])


def leading_comb_c1(params, t):
    """C1 from the central comb image alone.

    This is the classical Gaussian dressed with the half-quantum phase;
    neighbouring images are suppressed by exp(-2 pi^2/alpha) near t = 0,
    so the gap to the full correlator closes as alpha -> 0.
    """
    scales = derive_scales(params)
    z = complex(t) / scales.tau_b
    exponent = 0.5j * z - z * z / (2.0 * scales.alpha)
    return 0.5 * params.radius * params.radius * cmath.exp(exponent)
