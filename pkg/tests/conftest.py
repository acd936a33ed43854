"""Shared fixtures and frozen reference values.

The ORACLE_* constants were computed once with a 50-digit direct
summation of the defining series (mpmath) and frozen here; float64
results are compared against them at appropriate tolerances.
"""

import numpy as np
import pytest

from ringcorr import ModelParams

# direct series 1 + 2 sum_n exp(-alpha n^2/2) cos(n z)
ORACLE_S_2_0 = 1.772637204826652153
ORACLE_S_2_1 = 1.3820437336590285571
ORACLE_S_2_PI = 0.30062580086898437299
ORACLE_S_SELFDUAL_0 = 1.0864348112133080146  # alpha = 2 pi; equals pi^(1/4)/Gamma(3/4)
ORACLE_S_001_1 = 4.8346589035965997698e-21
ORACLE_S_1_COMPLEX = 0.2075349802647696936 - 0.32321658140045500738j  # z = 2+0.5j

# F(alpha, z) = exp(i z/2) S(alpha, z)
ORACLE_F_2_1 = 1.2128574804290262148 + 0.66258706138404344492j

# g(alpha, z) = exp(z^2/(2 alpha)) S(alpha, z)
ORACLE_G_2_1P1J = 1.7703284208188294873 + 0.0j

# C1 at mass = radius = hbar = 1, beta = 2 (alpha = 2, tau_b = 1)
ORACLE_C1_UNIT_T1 = 0.34210538883156090589 + 0.18689302570765980627j
ORACLE_C1_UNIT_T1_COMPLEX = 0.31266067872527298309 + 0.080233381598412273765j  # t = 1+0.5j

# mean energy over the energy scale hbar^2/(2 m R^2)
ORACLE_ENERGY_RATIO_A2 = 0.49897913083282046176
ORACLE_ENERGY_RATIO_A20 = 9.0791615659055801827e-05


@pytest.fixture
def unit_params():
    """alpha = 2, tau_a = 2, tau_b = 1, period = 4 pi."""
    return ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(987654321)


def params_with_alpha(alpha):
    """tau_b = 1 and the requested alpha, via beta = alpha."""
    return ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=float(alpha))
