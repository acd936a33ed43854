"""Exact thermal position correlations of a free particle on a ring.

The library computes the quantum correlators C1 and C2 from rapidly
converging theta-function representations, the classical Gaussian they
approach as hbar shrinks, and the thermodynamic quantities needed to
pin the temperature.  All series carry rigorous truncation-tail bounds.

Quick start:

    >>> from ringcorr import ModelParams, c1
    >>> p = ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=2.0)
    >>> c1(p, 0.0)
    (0.5+0j)
"""

from ringcorr.classical import GENERATOR_ID, McEstimate, c1_classical, mc_classical
from ringcorr.errors import BracketingError, PrefactorOverflowError, TermCapError
from ringcorr.limits import (
    LimitRow,
    classical_limit_scan,
    default_time_grid,
    deviation_order,
    leading_comb_c1,
)
from ringcorr.model import (
    ModelParams,
    TimeScales,
    beta_from_energy,
    derive_scales,
    mean_energy,
    partition_sum,
)
from ringcorr.quantum import CorrelationPoint, c1, c2, kms_residuals, scan
from ringcorr.selftest import CheckResult
from ringcorr.selftest import run as run_selftest
from ringcorr.theta import (
    DEFAULT_POLICY,
    SELF_DUAL_ALPHA,
    KernelValue,
    Representation,
    SummationPolicy,
    F_kernel,
    F_half_integer,
    backend,
    g_kernel,
    theta_direct,
    theta_poisson,
    truncation_terms,
)

__version__ = "0.1.0"

__all__ = [
    "BracketingError",
    "CheckResult",
    "CorrelationPoint",
    "DEFAULT_POLICY",
    "F_half_integer",
    "F_kernel",
    "GENERATOR_ID",
    "KernelValue",
    "LimitRow",
    "McEstimate",
    "ModelParams",
    "PrefactorOverflowError",
    "Representation",
    "SELF_DUAL_ALPHA",
    "SummationPolicy",
    "TermCapError",
    "TimeScales",
    "__version__",
    "backend",
    "beta_from_energy",
    "c1",
    "c1_classical",
    "c2",
    "classical_limit_scan",
    "default_time_grid",
    "derive_scales",
    "deviation_order",
    "g_kernel",
    "kms_residuals",
    "leading_comb_c1",
    "mc_classical",
    "mean_energy",
    "partition_sum",
    "run_selftest",
    "scan",
    "theta_direct",
    "theta_poisson",
    "truncation_terms",
]
