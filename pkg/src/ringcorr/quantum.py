"""Quantum position correlation functions on the ring.

C1(t) is the thermal two-time correlator of one Cartesian coordinate,

    C1(t) = (R^2/2) F(z)/F(0),    z = t/tau_b,

and C2(t) = exp(-i z) C1(t) is its operator-ordering partner.  Both are
analytic in complex time; the detailed-balance (KMS) identities relate
C1(-t), C1(t + i tau_a), and C2(t).  Real-time values are periodic with
the full recurrence period 4 pi tau_b and flip sign at half period.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from ringcorr.errors import PrefactorOverflowError, TermCapError
from ringcorr.model import derive_scales
from ringcorr.theta import DEFAULT_POLICY, F_kernel


@dataclass(frozen=True)
class CorrelationPoint:
    """One scan sample: physical time, its dimensionless z, both correlators."""

    time: Union[float, complex]
    z: complex
    c1: complex
    c2: complex
    tail_bound: float
    error: Optional[str] = None


@lru_cache(maxsize=512)
def _f_zero(alpha, policy):
    kv = F_kernel(alpha, 0j, policy)
    return kv.value, kv.tail_bound


def _c1_parts(params, t, policy):
    """(c1, propagated tail bound, scales); the t = 0 value is exact."""
    scales = derive_scales(params)
    half_r2 = 0.5 * params.radius * params.radius
    tc = complex(t)
    if tc == 0:
        return complex(half_r2, 0.0), 0.0, scales
    z = tc / scales.tau_b
    kv = F_kernel(scales.alpha, z, policy)
    f0, tail0 = _f_zero(scales.alpha, policy)
    af0 = abs(f0)
    value = half_r2 * kv.value / f0
    tail = (half_r2 / af0) * (kv.tail_bound + abs(kv.value) / af0 * tail0)
    return value, tail, scales


def c1(params, t, policy=DEFAULT_POLICY):
    """C1 at real or complex time t."""
    return _c1_parts(params, t, policy)[0]


def c2(params, t, policy=DEFAULT_POLICY):
    """C2(t) = exp(-i t/tau_b) C1(t); same modulus as C1 for real t."""
    value, _, scales = _c1_parts(params, t, policy)
    z = complex(t) / scales.tau_b
    return cmath.exp(-1j * z) * value


def kms_residuals(params, t, policy=DEFAULT_POLICY):
    """Detailed-balance residuals at real time t.

    Returns (|C1(-t) - C1(t + i tau_a)|, |C1(-t) - C2(t)|); both vanish
    analytically, so the values measure accumulated numerical error.
    """
    scales = derive_scales(params)
    reflected = c1(params, -t, policy)
    shifted = c1(params, complex(t, scales.tau_a), policy)
    partner = c2(params, t, policy)
    return abs(reflected - shifted), abs(reflected - partner)


def scan(params, t_grid, policy=DEFAULT_POLICY):
    """Evaluate both correlators over a sorted real time grid.

    Kernel failures are collected per point (flagged via the error field)
    rather than aborting the scan.
    """
    grid = [float(t) for t in t_grid]
    if not grid:
        raise ValueError("time grid must not be empty")
    if any(not math.isfinite(t) for t in grid):
        raise ValueError("time grid must be finite")
    if any(a > b for a, b in zip(grid, grid[1:])):
        raise ValueError("time grid must be sorted ascending")
    scales = derive_scales(params)
    points = []
    for t in grid:
        z = complex(t) / scales.tau_b
        try:
            value, tail, _ = _c1_parts(params, t, policy)
            partner = cmath.exp(-1j * z) * value
            points.append(
                CorrelationPoint(time=t, z=z, c1=value, c2=partner, tail_bound=tail)
            )
        except (TermCapError, PrefactorOverflowError) as exc:
            nan = complex(math.nan, math.nan)
            points.append(
                CorrelationPoint(
                    time=t, z=z, c1=nan, c2=nan, tail_bound=math.inf, error=str(exc)
                )
            )
    return points
