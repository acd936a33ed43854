"""Named end-to-end invariant checks behind `ringcorr selftest`.

Each check returns None on success or a short failure detail.  The suite
covers the mathematical identities the package is built on: dual series
agreement, detailed balance, periodicities, the classical limit, the
Monte Carlo estimator, and thermodynamic round trips.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ringcorr.classical import c1_classical, mc_classical
from ringcorr.limits import classical_limit_scan, default_time_grid, deviation_order
from ringcorr.model import ModelParams, beta_from_energy, derive_scales, mean_energy, partition_sum
from ringcorr.quantum import c1, kms_residuals, scan
from ringcorr.theta import (
    DEFAULT_POLICY,
    Representation,
    SummationPolicy,
    F_half_integer,
    F_kernel,
    g_kernel,
    theta_direct,
    theta_poisson,
)

_ALPHAS = (0.01, 0.1, 1.0, 2.0, 2.0 * math.pi, 10.0, 100.0)
_SELF_DUAL_PARTITION = 1.0864348112133080
_PARAM_SETS = (
    ModelParams(1.0, 1.0, 1.0, 2.0),
    ModelParams(1.3, 0.7, 0.9, 1.7),
    ModelParams(1.0, 1.0, 0.35, 1.5),
    ModelParams(0.8, 1.1, 2.5, 1.2),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _z_grid(alpha):
    # 11 x 5 rectangle: one full real period by two imaginary strips
    return [
        complex(x, y)
        for x in np.linspace(-4.0 * math.pi, 4.0 * math.pi, 11)
        for y in np.linspace(-2.0 * alpha, 2.0 * alpha, 5)
    ]


def _check_time_scales():
    for hbar in (0.25, 1.0, 4.0):
        params = ModelParams(1.4, 0.8, hbar, 2.3)
        s = derive_scales(params)
        product = params.beta * params.mass * params.radius**2
        if abs(s.tau_a * s.tau_b - product) > 1e-12 * product:
            return f"tau_a tau_b != beta m R^2 at hbar={hbar}"
        if abs(s.period - 4.0 * math.pi * s.tau_b) > 1e-12 * s.period:
            return f"period != 4 pi tau_b at hbar={hbar}"
    return None


def _check_partition_dual():
    for alpha in np.logspace(-2, 2, 9):
        direct = partition_sum(float(alpha))
        comb = theta_poisson(float(alpha), 0j).value.real
        if abs(direct - comb) > 1e-12 * direct:
            return f"partition mismatch at alpha={alpha:.3g}"
    spot = partition_sum(2.0 * math.pi)
    if abs(spot - _SELF_DUAL_PARTITION) > 1e-7:
        return f"self-dual partition value off: {spot!r}"
    return None


def _check_energy_monotone():
    params = [ModelParams(1.0, 1.0, 1.0, float(b)) for b in np.logspace(-3, 3, 13)]
    energies = [mean_energy(p) for p in params]
    if any(a <= b for a, b in zip(energies, energies[1:])):
        return "mean energy not strictly decreasing in beta"
    low = ModelParams(1.0, 1.0, 1.0, 1e-6)
    expected = 1.0 / (2.0 * low.beta)
    got = mean_energy(low)
    if abs(got - expected) > 1e-4 * expected:
        return f"equipartition violated: {got!r} vs {expected!r}"
    return None


def _check_energy_roundtrip():
    for beta in np.logspace(-3, 3, 7):
        target = mean_energy(ModelParams(1.0, 1.0, 1.0, float(beta)))
        back = beta_from_energy(1.0, 1.0, 1.0, target)
        if abs(back - beta) > 1e-10 * beta:
            return f"roundtrip off at beta={beta:.3g}: {back!r}"
    return None


def _check_representation_equivalence():
    for alpha in _ALPHAS:
        for z in _z_grid(alpha):
            a = theta_direct(alpha, z)
            b = theta_poisson(alpha, z)
            # direct summation carries roundoff of order machine epsilon
            # times the positive term envelope, which the cancellation at
            # exponentially small values cannot beat
            envelope = theta_direct(alpha, complex(0.0, z.imag)).value.real
            tol = 1e-10 * max(abs(a.value), 1e-30) + 1e-13 * envelope
            if abs(a.value - b.value) > tol:
                return f"series disagree at alpha={alpha:.3g}, z={z:.3g}"
    return None


def _check_evenness_reality():
    for alpha in (0.5, 2.0, 10.0):
        for x in np.linspace(0.0, 4.0 * math.pi, 9):
            plus = theta_direct(alpha, complex(x, 0.0)).value
            minus = theta_direct(alpha, complex(-x, 0.0)).value
            if plus != minus:
                return f"evenness broken at alpha={alpha}, x={x:.3g}"
            if plus.imag != 0.0:
                return f"real z gave imaginary part at alpha={alpha}, x={x:.3g}"
    return None


def _check_half_integer():
    for alpha in (0.5, 2.0, 2.0 * math.pi, 10.0):
        for z in (0j, 1.0 + 0j, complex(2.5, 0.3 * alpha), complex(-4.0, -0.5 * alpha)):
            a = F_kernel(alpha, z)
            b = F_half_integer(alpha, z)
            if abs(a.value - b.value) > 1e-10 * max(abs(a.value), 1e-30):
                return f"half-integer series disagrees at alpha={alpha}, z={z}"
    return None


def _check_rescaled_periodicity():
    for alpha in (0.5, 2.0, 2.0 * math.pi, 10.0):
        for z in (0.3 + 0.2j, complex(1.5, -0.4 * alpha), 2.0 + 0j):
            base = g_kernel(alpha, z).value
            for m in (-2, -1, 1, 2):
                shifted = g_kernel(alpha, complex(z.real, z.imag + m * alpha)).value
                if abs(shifted - base) > 1e-10 * abs(base):
                    return f"imaginary period broken at alpha={alpha}, z={z}, m={m}"
    return None


def _check_kms():
    for params in _PARAM_SETS:
        scales = derive_scales(params)
        limit = 1e-10 * params.radius**2
        for t in np.linspace(-0.5, 0.5, 7) * scales.period:
            r1, r2 = kms_residuals(params, float(t))
            if r1 > limit or r2 > limit:
                return f"KMS residuals {r1:.2e}/{r2:.2e} at t={t:.3g}, params={params}"
    return None


def _check_periodicity():
    for params in _PARAM_SETS:
        scales = derive_scales(params)
        limit = 1e-10 * params.radius**2
        for t in np.linspace(0.1, 0.9, 5) * scales.period:
            base = c1(params, float(t))
            if abs(c1(params, float(t) + scales.period) - base) > limit:
                return f"period violated at t={t:.3g}, params={params}"
            if abs(c1(params, float(t) + 0.5 * scales.period) + base) > limit:
                return f"half-period sign flip violated at t={t:.3g}, params={params}"
    return None


def _check_dual_c1():
    direct = SummationPolicy(representation=Representation.DIRECT)
    comb = SummationPolicy(representation=Representation.POISSON)
    for params in _PARAM_SETS:
        scales = derive_scales(params)
        limit = 1e-10 * params.radius**2
        for t in np.linspace(0.0, 1.0, 9) * scales.period:
            gap = abs(c1(params, float(t), direct) - c1(params, float(t), comb))
            if gap > limit:
                return f"representations disagree by {gap:.2e} at t={t:.3g}"
    return None


def _check_modulus_bound():
    for params in _PARAM_SETS:
        scales = derive_scales(params)
        cap = 0.5 * params.radius**2 * (1.0 + 1e-12)
        for t in np.linspace(0.0, 1.0, 17) * scales.period:
            if abs(c1(params, float(t))) > cap:
                return f"|C1| exceeds C1(0) at t={t:.3g}"
    return None


def _check_classical_limit():
    hbars = [2.0**-k for k in range(8)]
    grid = default_time_grid(1.0, 1.0, 1.0, points=31)
    rows = classical_limit_scan(1.0, 1.0, 1.0, hbars, grid)
    sups = [row.sup_deviation for row in rows]
    if any(a <= b for a, b in zip(sups, sups[1:])):
        return "sup deviation not strictly decreasing as hbar halves"
    slope = deviation_order(rows)
    if abs(slope - 1.0) > 0.1:
        return f"deviation order {slope:.4f} not within 1.0 +- 0.1"
    return None


def _check_scan_consistency():
    params = ModelParams(1.0, 1.0, 1.0, 2.0)
    scales = derive_scales(params)
    grid = np.linspace(0.0, scales.period, 33)
    points = scan(params, grid)
    if any(p.error for p in points):
        return "scan flagged errors on a benign grid"
    for p in points:
        if abs(abs(p.c2) - abs(p.c1)) > 1e-12 * max(abs(p.c1), 1e-30):
            return f"|C2| != |C1| at t={p.time:.3g}"
    first, last = points[0].c1, points[-1].c1
    if abs(first - last) > 1e-10 * params.radius**2:
        return "scan endpoints one period apart disagree"
    return None


def _check_mc(samples, seed):
    params = ModelParams(1.0, 1.0, 1.0, 1.0)
    grid = default_time_grid(1.0, 1.0, 1.0, points=21, span=4.0)
    estimates = mc_classical(params, grid, samples, seed)
    within = sum(
        abs(est.mean - c1_classical(params, float(t))) <= 3.0 * est.std_error
        for t, est in zip(grid, estimates)
    )
    if within < 19:
        return f"only {within}/21 Monte Carlo points within 3 sigma"
    again = mc_classical(params, grid[:2], samples, seed)
    if any(a != b for a, b in zip(estimates[:2], again)):
        return "Monte Carlo output not reproducible under a fixed seed"
    return None


def _check_tail_honesty():
    tight = SummationPolicy(eps=1e-14)
    for alpha in (0.5, 2.0, 10.0):
        for z in (1.0 + 0j, complex(2.0, 0.5 * alpha)):
            for fn in (theta_direct, theta_poisson):
                coarse = fn(alpha, z)
                fine = fn(alpha, z, tight)
                if abs(coarse.value - fine.value) > coarse.tail_bound:
                    return f"tail bound dishonest for {fn.__name__} at alpha={alpha}"
    return None


def run(samples=200_000, seed=20260819):
    """Run every named invariant; returns a list of CheckResult."""
    checks = [
        ("time-scales", _check_time_scales),
        ("partition-dual", _check_partition_dual),
        ("energy-monotone", _check_energy_monotone),
        ("energy-roundtrip", _check_energy_roundtrip),
        ("representation-equivalence", _check_representation_equivalence),
        ("evenness-reality", _check_evenness_reality),
        ("half-integer-series", _check_half_integer),
        ("rescaled-periodicity", _check_rescaled_periodicity),
        ("kms-identities", _check_kms),
        ("time-periodicity", _check_periodicity),
        ("dual-representation-c1", _check_dual_c1),
        ("modulus-bound", _check_modulus_bound),
        ("classical-limit-order", _check_classical_limit),
        ("scan-consistency", _check_scan_consistency),
        ("mc-coverage", lambda: _check_mc(samples, seed)),
        ("tail-honesty", _check_tail_honesty),
    ]
    results = []
    for name, fn in checks:
        try:
            detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            detail = f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name=name, passed=detail is None, detail=detail or ""))
    return results
