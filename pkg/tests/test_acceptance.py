"""Acceptance gate: one test per shipped guarantee.

Run with `pytest -v tests/test_acceptance.py`; the verbose listing gives
one PASSED/FAILED line per criterion.  Every tolerance here is part of
the package contract, so do not loosen any of them to make a failing
build green.
"""

import json
import math
import subprocess
import sys
from dataclasses import replace

import numpy as np
import pytest

from ringcorr.classical import c1_classical, mc_classical
from ringcorr.limits import classical_limit_scan, default_time_grid, deviation_order
from ringcorr.model import ModelParams, beta_from_energy, derive_scales, mean_energy, partition_sum
from ringcorr.quantum import c1, c2, kms_residuals
from ringcorr.theta import (
    DEFAULT_POLICY,
    SELF_DUAL_ALPHA,
    Representation,
    F_half_integer,
    F_kernel,
    g_kernel,
    theta_direct,
    theta_poisson,
)
from conftest import ORACLE_S_SELFDUAL_0, params_with_alpha

ALPHAS = (0.01, 0.1, 1.0, 2.0, SELF_DUAL_ALPHA, 10.0, 100.0)
FORCE_DIRECT = replace(DEFAULT_POLICY, representation=Representation.DIRECT)
FORCE_POISSON = replace(DEFAULT_POLICY, representation=Representation.POISSON)


def test_criterion_01_dual_representation_equality():
    # forced spectral and forced comb evaluation of C1 agree pointwise
    # within 1e-10 R^2 over one full period at seven alpha decades
    for alpha in ALPHAS:
        p = params_with_alpha(alpha)
        period = derive_scales(p).period
        worst = 0.0
        for t in np.linspace(0.0, period, 1001):
            a = c1(p, float(t), FORCE_DIRECT)
            b = c1(p, float(t), FORCE_POISSON)
            worst = max(worst, abs(a - b))
        assert worst <= 1e-10, (alpha, worst)


def test_criterion_02_half_integer_representation():
    # 1e-10 relative agreement wherever the alternating series is well
    # conditioned (value above 1e-3 of its term envelope); points below
    # that are roundoff-limited and checked against the envelope instead
    policy_half = replace(DEFAULT_POLICY, representation=Representation.HALF_INTEGER)
    for alpha in ALPHAS:
        envelope = theta_direct(alpha, 0.0).value.real
        for t in np.linspace(0.0, 4 * math.pi, 1001):
            a = F_kernel(alpha, complex(t), DEFAULT_POLICY).value
            b = F_kernel(alpha, complex(t), policy_half).value
            if abs(a) >= 1e-3 * envelope:
                assert abs(a - b) <= 1e-10 * abs(a), (alpha, t)
            else:
                assert abs(a - b) <= 1e-10 * envelope, (alpha, t)


def test_criterion_03_kms_identities():
    rng = np.random.default_rng(31415926)
    for _ in range(64):
        mass, radius, hbar = rng.uniform(0.5, 2.0, 3)
        beta = rng.uniform(0.25, 4.0)
        p = ModelParams(mass=mass, radius=radius, hbar=hbar, beta=beta)
        t = rng.uniform(-10.0, 10.0)
        r_shift, r_partner = kms_residuals(p, t)
        tol = 1e-10 * radius * radius
        assert r_shift <= tol, (mass, radius, hbar, beta, t, r_shift)
        assert r_partner <= tol, (mass, radius, hbar, beta, t, r_partner)


def test_criterion_04_strict_periodicity():
    rng = np.random.default_rng(27182818)
    p = params_with_alpha(2.0)
    scales = derive_scales(p)
    tol = 1e-10 * p.radius**2
    for _ in range(32):
        t = rng.uniform(-20.0, 20.0)
        base = c1(p, t)
        assert abs(c1(p, t + scales.period) - base) <= tol, t
        assert abs(c1(p, t + 0.5 * scales.period) + base) <= tol, t


def test_criterion_05_g_imaginary_period():
    for alpha in (0.5, 2.0, SELF_DUAL_ALPHA, 10.0):
        for z in [0.5 + 0.3j, -2.0 + 1.0j, 3.0 - 2.0j, 0.0 + 0.0j]:
            base = g_kernel(alpha, z).value
            for m in (-2, -1, 1, 2):
                shifted = g_kernel(alpha, z + 1j * m * alpha).value
                assert abs(shifted - base) <= 1e-10 * abs(base), (alpha, z, m)


def test_criterion_06_classical_limit():
    hbars = [2.0**-k for k in range(11)]
    grid = default_time_grid(1.0, 1.0, 1.0, points=61)
    rows = classical_limit_scan(1.0, 1.0, 1.0, hbars, grid)
    sups = [r.sup_deviation for r in rows]
    assert all(a > b for a, b in zip(sups, sups[1:])), sups
    slope = deviation_order(rows)
    assert abs(slope - 1.0) <= 0.1, slope
    p = ModelParams(mass=1.0, radius=1.0, hbar=2.0**-10, beta=1.0)
    for t in np.linspace(0.0, 3.0, 301):
        q = abs(c1(p, float(t), FORCE_POISSON))
        cl = 0.5 * math.exp(-0.5 * t * t)
        assert abs(q - cl) <= 1e-6, t


def test_criterion_07_classical_closed_form_vs_monte_carlo():
    p = ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=1.0)
    span = 4.0 * math.sqrt(p.beta * p.mass) * p.radius
    grid = np.linspace(0.0, span, 21)
    estimates = mc_classical(p, grid, 1_000_000, 20260819)
    hits = sum(
        abs(e.mean - c1_classical(p, float(t))) <= 3.0 * e.std_error
        for t, e in zip(grid, estimates)
    )
    assert hits >= 19, hits
    again = mc_classical(p, grid[:3], 1_000_000, 20260819)
    for a, b in zip(estimates[:3], again):
        assert a.mean == b.mean and a.std_error == b.std_error


def test_criterion_08_thermodynamic_consistency():
    for beta in np.logspace(-3, 3, 13):
        p = ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=float(beta))
        recovered = beta_from_energy(1.0, 1.0, 1.0, mean_energy(p))
        assert recovered == pytest.approx(float(beta), rel=1e-10), beta
    p = ModelParams(mass=1.0, radius=1.0, hbar=1.0, beta=1e-6)
    assert mean_energy(p) == pytest.approx(0.5 / 1e-6, rel=1e-4)


def test_criterion_09_self_dual_spot_value():
    assert abs(partition_sum(SELF_DUAL_ALPHA) - ORACLE_S_SELFDUAL_0) <= 1e-7
    assert abs(theta_direct(SELF_DUAL_ALPHA, 0.0).value.real - ORACLE_S_SELFDUAL_0) <= 1e-7
    assert abs(theta_poisson(SELF_DUAL_ALPHA, 0.0).value.real - ORACLE_S_SELFDUAL_0) <= 1e-7


def test_criterion_10_cli_determinism(tmp_path):
    def scan_to(path):
        return subprocess.run(
            [sys.executable, "-m", "ringcorr", "scan", "--beta", "2",
             "--points", "101", "--out", str(path)],
            capture_output=True, text=True, timeout=300,
        )

    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert scan_to(a).returncode == 0
    assert scan_to(b).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    proc = subprocess.run(
        [sys.executable, "-m", "ringcorr", "selftest", "--samples", "20000"],
        capture_output=True, text=True, timeout=600,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
