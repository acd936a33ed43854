"""Kernel-level checks: frozen oracle values, invariants, error paths."""

import math
from dataclasses import replace

import numpy as np
import pytest

from ringcorr.errors import PrefactorOverflowError, TermCapError
from ringcorr.theta import (
    DEFAULT_POLICY,
    SELF_DUAL_ALPHA,
    Representation,
    SummationPolicy,
    F_half_integer,
    F_kernel,
    g_kernel,
    theta_direct,
    theta_poisson,
    truncation_terms,
)
from conftest import (
    ORACLE_F_2_1,
    ORACLE_G_2_1P1J,
    ORACLE_S_001_1,
    ORACLE_S_1_COMPLEX,
    ORACLE_S_2_0,
    ORACLE_S_2_1,
    ORACLE_S_2_PI,
    ORACLE_S_SELFDUAL_0,
)

ALPHAS = (0.01, 0.1, 1.0, 2.0, SELF_DUAL_ALPHA, 10.0, 100.0)


def test_direct_matches_oracle_values():
    assert theta_direct(2.0, 0.0).value.real == pytest.approx(ORACLE_S_2_0, rel=1e-14)
    assert theta_direct(2.0, 1.0).value.real == pytest.approx(ORACLE_S_2_1, rel=1e-14)
    assert theta_direct(2.0, math.pi).value.real == pytest.approx(ORACLE_S_2_PI, rel=1e-13)
    assert theta_direct(SELF_DUAL_ALPHA, 0.0).value.real == pytest.approx(
        ORACLE_S_SELFDUAL_0, rel=1e-14
    )


def test_poisson_matches_oracle_values():
    assert theta_poisson(0.01, 1.0).value.real == pytest.approx(ORACLE_S_001_1, rel=1e-13)
    assert theta_poisson(2.0, 1.0).value.real == pytest.approx(ORACLE_S_2_1, rel=1e-14)
    assert theta_poisson(SELF_DUAL_ALPHA, 0.0).value.real == pytest.approx(
        ORACLE_S_SELFDUAL_0, rel=1e-14
    )


def test_complex_argument_matches_oracle():
    got = theta_direct(1.0, 2.0 + 0.5j).value
    assert got == pytest.approx(ORACLE_S_1_COMPLEX, rel=1e-13)
    got = theta_poisson(1.0, 2.0 + 0.5j).value
    assert got == pytest.approx(ORACLE_S_1_COMPLEX, rel=1e-13)


def test_f_kernel_matches_oracle():
    for rep in (Representation.AUTO, Representation.DIRECT,
                Representation.POISSON, Representation.HALF_INTEGER):
        policy = replace(DEFAULT_POLICY, representation=rep)
        got = F_kernel(2.0, 1.0 + 0.0j, policy).value
        assert got == pytest.approx(ORACLE_F_2_1, rel=1e-13), rep


def test_g_kernel_matches_oracle():
    got = g_kernel(2.0, 1.0 + 1.0j).value
    assert got == pytest.approx(ORACLE_G_2_1P1J, rel=1e-13, abs=1e-13)


def test_real_argument_gives_exactly_real_theta():
    for alpha in ALPHAS:
        for z in np.linspace(-7.0, 7.0, 23):
            assert theta_direct(alpha, float(z)).value.imag == 0.0
            assert theta_poisson(alpha, float(z)).value.imag == 0.0


def test_evenness_is_bit_exact():
    for alpha in ALPHAS:
        for z in [0.3, 1.7, 2.0 + 0.5j, -4.0 + 2.0j, 11.0 - 1.0j]:
            plus = theta_direct(alpha, z).value
            minus = theta_direct(alpha, -z).value
            assert plus.real == minus.real and plus.imag == minus.imag
            plus = theta_poisson(alpha, z).value
            minus = theta_poisson(alpha, -z).value
            assert plus.real == minus.real and plus.imag == minus.imag


def _z_grid(alpha):
    return [
        complex(x, y)
        for x in np.linspace(-4 * math.pi, 4 * math.pi, 11)
        for y in np.linspace(-2 * alpha, 2 * alpha, 5)
    ]


def test_representation_equivalence_on_contract_grid():
    # tolerance carries a roundoff allowance scaled by the alternating
    # series' term envelope; at alpha <= 0.1 strong cancellation makes
    # the bare floor unreachable in float64
    for alpha in ALPHAS:
        for z in _z_grid(alpha):
            a = theta_direct(alpha, z).value
            b = theta_poisson(alpha, z).value
            envelope = theta_direct(alpha, complex(0.0, z.imag)).value.real
            tol = 1e-10 * max(abs(a), 1e-30) + 1e-13 * envelope
            assert abs(a - b) <= tol, (alpha, z, abs(a - b), tol)


def test_half_integer_matches_f_kernel_on_contract_grid():
    for alpha in ALPHAS:
        for z in _z_grid(alpha):
            a = F_kernel(alpha, z).value
            b = F_half_integer(alpha, z, DEFAULT_POLICY).value
            envelope = theta_direct(alpha, complex(0.0, z.imag)).value.real
            tol = 1e-10 * max(abs(a), 1e-30) + 1e-13 * envelope
            assert abs(a - b) <= tol, (alpha, z, abs(a - b), tol)


def test_g_kernel_imaginary_period():
    for alpha in (0.5, 2.0, SELF_DUAL_ALPHA, 10.0):
        for z in [0.5 + 0.3j, -2.0 + 1.0j, 3.0 - 2.0j]:
            base = g_kernel(alpha, z).value
            for m in (-2, -1, 1, 2):
                shifted = g_kernel(alpha, z + 1j * m * alpha).value
                assert abs(shifted - base) <= 1e-10 * abs(base), (alpha, z, m)


def test_g_kernel_rejects_half_integer_representation():
    policy = replace(DEFAULT_POLICY, representation=Representation.HALF_INTEGER)
    with pytest.raises(ValueError):
        g_kernel(2.0, 1.0 + 0.0j, policy)


def test_g_kernel_overflow_guard():
    with pytest.raises(PrefactorOverflowError):
        g_kernel(0.5, 50.0 + 0.0j)


def test_auto_representation_switches_at_self_dual_point():
    # below the self-dual alpha the comb needs fewer terms, above it the
    # spectral series does; both must agree wherever they are selected
    narrow = F_kernel(1.0, 0.5 + 0.0j)
    forced = F_kernel(1.0, 0.5 + 0.0j, replace(DEFAULT_POLICY, representation=Representation.POISSON))
    assert narrow.value == forced.value
    wide = F_kernel(10.0, 0.5 + 0.0j)
    forced = F_kernel(10.0, 0.5 + 0.0j, replace(DEFAULT_POLICY, representation=Representation.DIRECT))
    assert wide.value == forced.value


def test_tail_bound_is_honest():
    # refining eps moves the value by less than the coarse tail bound
    fine = SummationPolicy(eps=1e-15, max_terms=10_000_000)
    for alpha in ALPHAS:
        for z in [0.0 + 0.0j, 1.0 + 0.0j, 2.0 + 0.5j, -3.0 + 1.0j]:
            coarse_kv = F_kernel(alpha, z, replace(DEFAULT_POLICY, eps=1e-9))
            fine_kv = F_kernel(alpha, z, fine)
            drift = abs(coarse_kv.value - fine_kv.value)
            assert drift <= coarse_kv.tail_bound + 1e-13 * abs(fine_kv.value), (alpha, z)


def test_term_cap_raises():
    policy = SummationPolicy(eps=1e-12, max_terms=3, representation=Representation.DIRECT)
    with pytest.raises(TermCapError):
        theta_direct(0.01, 1.0, policy)


def test_invalid_inputs_rejected():
    with pytest.raises(ValueError):
        theta_direct(0.0, 1.0)
    with pytest.raises(ValueError):
        theta_direct(-2.0, 1.0)
    with pytest.raises(ValueError):
        theta_direct(float("nan"), 1.0)
    with pytest.raises(ValueError):
        theta_direct(2.0, complex(float("inf"), 0.0))
    with pytest.raises(ValueError):
        SummationPolicy(eps=0.0)
    with pytest.raises(ValueError):
        SummationPolicy(eps=2.0)
    with pytest.raises(ValueError):
        SummationPolicy(max_terms=2)


def test_truncation_terms_examples():
    assert truncation_terms(2.0, 0.0, 1e-16) == 7
    assert truncation_terms(50.0, 0.0, 1e-16) == 2
    assert truncation_terms(SELF_DUAL_ALPHA, 0.0, 1e-12) == 3


def test_truncation_terms_suffice():
    # summing the predicted number of terms must land within a small
    # multiple of eps relative to the converged value
    for alpha in (0.5, 2.0, 10.0):
        for z in (0.0 + 0.0j, 1.0 + 0.5j, 2.0 + 1.0j):
            for eps in (1e-8, 1e-12):
                n = truncation_terms(alpha, z, eps)
                total = 1.0 + 0.0j
                for k in range(1, n + 1):
                    w = 2.0 * math.exp(-0.5 * alpha * k * k)
                    total += w * np.cos(k * np.complex128(z))
                ref = theta_direct(alpha, z, SummationPolicy(eps=1e-15)).value
                assert abs(total - ref) <= 10 * eps * abs(ref), (alpha, z, eps)


def test_truncation_terms_monotone_in_eps():
    for alpha in (0.5, 2.0, 10.0):
        previous = None
        for eps in (1e-4, 1e-8, 1e-12, 1e-16):
            n = truncation_terms(alpha, 1.0 + 0.0j, eps)
            if previous is not None:
                assert n >= previous
            previous = n


def test_kernel_value_reports_positive_terms():
    kv = theta_direct(2.0, 1.0)
    assert kv.terms_used >= 1
    assert kv.tail_bound >= 0.0
