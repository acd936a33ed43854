"""Dual-representation evaluation of the ring correlation kernels.

The central object is the Gaussian-damped cosine series

    S(alpha, z) = sum_n exp(-alpha n^2/2) cos(n z),   alpha > 0, z complex,

which has a second, dual form as a Gaussian comb

    S(alpha, z) = sqrt(2 pi/alpha) sum_n exp(-(z + 2 n pi)^2/(2 alpha)).

The direct series wins for large alpha, the comb for small alpha; the
crossover is the self-dual point alpha = 2 pi.  On top of S sit the
phase-shifted kernel F(z) = exp(i z/2) S(alpha, z), its half-integer-index
series, and the rescaled kernel g(z) = exp(z^2/(2 alpha)) S(alpha, z),
which is exactly periodic along the imaginary axis with period alpha.

Complex time arguments are plain Python complex numbers.
"""

import cmath
import enum
import math
from dataclasses import dataclass

from ringcorr._backend import impl as _impl
from ringcorr._backend import name as _backend_name
from ringcorr.errors import PrefactorOverflowError

SELF_DUAL_ALPHA = 2.0 * math.pi

# largest exponent the rescaled kernel may reach; leaves room for the
# sqrt(2 pi/alpha) width factor below the double limit of ~709.8
_G_EXPONENT_LIMIT = 700.0

ComplexTime = complex


class Representation(enum.Enum):
    """Which series evaluates a kernel."""

    AUTO = "auto"
    DIRECT = "direct"
    POISSON = "poisson"
    HALF_INTEGER = "half"


@dataclass(frozen=True)
class SummationPolicy:
    """Truncation control shared by all kernels.

    eps is a relative tolerance: on success the reported tail bound is at
    most eps times the magnitude of the returned value.
    """

    eps: float = 1e-12
    max_terms: int = 10_000_000
    representation: Representation = Representation.AUTO

    def __post_init__(self):
        if not (0.0 < self.eps < 1.0):
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")
        if self.max_terms < 3:
            raise ValueError(f"max_terms must be at least 3, got {self.max_terms}")
        if not isinstance(self.representation, Representation):
            raise ValueError(f"not a Representation: {self.representation!r}")


DEFAULT_POLICY = SummationPolicy()


@dataclass(frozen=True)
class KernelValue:
    """A kernel evaluation with its truncation certificate."""

    value: complex
    terms_used: int
    tail_bound: float


def backend():
    """Name of the active kernel backend, 'compiled' or 'python'."""
    return _backend_name


def _checked(alpha, z):
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"alpha must be positive and finite, got {alpha!r}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"z must have finite real and imaginary parts, got {z!r}")
    return z


def _resolve(alpha, representation):
    if representation is Representation.AUTO:
        if alpha >= SELF_DUAL_ALPHA:
            return Representation.DIRECT
        return Representation.POISSON
    return representation


def theta_direct(alpha, z, policy=DEFAULT_POLICY):
    """S(alpha, z) by the direct series."""
    z = _checked(alpha, z)
    re, im, terms, tail = _impl.direct_sum(
        alpha, z.real, z.imag, policy.eps, policy.max_terms
    )
    return KernelValue(complex(re, im), terms, tail)


def theta_poisson(alpha, z, policy=DEFAULT_POLICY):
    """S(alpha, z) by the Gaussian comb."""
    z = _checked(alpha, z)
    re, im, terms, tail = _impl.poisson_sum(
        alpha, z.real, z.imag, policy.eps, policy.max_terms
    )
    return KernelValue(complex(re, im), terms, tail)


def F_kernel(alpha, z, policy=DEFAULT_POLICY):
    """Phase-shifted kernel F(z) = exp(i z/2) S(alpha, z).

    With representation AUTO the direct series is used for
    alpha >= 2 pi and the comb below it.
    """
    z = _checked(alpha, z)
    rep = _resolve(alpha, policy.representation)
    if rep is Representation.HALF_INTEGER:
        return F_half_integer(alpha, z, policy)
    if rep is Representation.DIRECT:
        re, im, terms, tail = _impl.direct_sum(
            alpha, z.real, z.imag, policy.eps, policy.max_terms
        )
    else:
        re, im, terms, tail = _impl.poisson_sum(
            alpha, z.real, z.imag, policy.eps, policy.max_terms
        )
    phase = cmath.exp(0.5j * z)
    return KernelValue(phase * complex(re, im), terms, abs(phase) * tail)


def F_half_integer(alpha, z, policy=DEFAULT_POLICY):
    """F(z) by its half-integer-index series."""
    z = _checked(alpha, z)
    re, im, terms, tail = _impl.half_integer_f(
        alpha, z.real, z.imag, policy.eps, policy.max_terms
    )
    return KernelValue(complex(re, im), terms, tail)


def g_kernel(alpha, z, policy=DEFAULT_POLICY):
    """Rescaled kernel g(z) = exp(z^2/(2 alpha)) S(alpha, z).

    g is exactly invariant under z -> z + i m alpha for integer m.  The
    quadratic prefactor is folded into every term, so evaluation succeeds
    whenever the value itself fits a double; beyond that a
    PrefactorOverflowError points back to F_kernel.
    """
    z = _checked(alpha, z)
    rep = _resolve(alpha, policy.representation)
    if rep is Representation.HALF_INTEGER:
        raise ValueError("the half-integer series applies to F_kernel only")
    exponent = 0.5 * z.real * z.real / alpha
    if exponent > _G_EXPONENT_LIMIT:
        raise PrefactorOverflowError(exponent)
    if rep is Representation.DIRECT:
        re, im, terms, tail = _impl.g_direct(
            alpha, z.real, z.imag, policy.eps, policy.max_terms
        )
    else:
        re, im, terms, tail = _impl.g_poisson(
            alpha, z.real, z.imag, policy.eps, policy.max_terms
        )
    return KernelValue(complex(re, im), terms, tail)


def truncation_terms(alpha, z, eps, representation=Representation.DIRECT):
    """Smallest N whose term envelope at index N falls below eps.

    The envelope is measured relative to the index-0 term of the chosen
    series (the nu = 1/2 term for the half-integer series); truncating at
    |n| <= N then leaves a tail below eps times that term.  Works in log
    space, so no range limits apply.
    """
    z = _checked(alpha, z)
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    rep = _resolve(alpha, representation)
    log_eps = math.log(eps)

    if rep is Representation.POISSON:
        n = 1
        while True:
            up = z.real + 2.0 * math.pi * n
            dn = z.real - 2.0 * math.pi * n
            rel = -0.5 * (min(up * up, dn * dn) - z.real * z.real) / alpha
            if rel <= log_eps:
                return n
            n += 1

    if rep is Representation.HALF_INTEGER:
        y = abs(z.imag - 0.5 * alpha)
    else:
        y = abs(z.imag)

    def log_envelope(n):
        nu = n + 0.5 if rep is Representation.HALF_INTEGER else float(n)
        ref = 0.5 if rep is Representation.HALF_INTEGER else 0.0
        return (-0.5 * alpha * nu * nu + nu * y) - (-0.5 * alpha * ref * ref + ref * y)

    n = max(1, math.ceil((y + math.sqrt(y * y - 2.0 * alpha * log_eps)) / alpha))
    while n > 1 and log_envelope(n - 1) <= log_eps:
        n -= 1
    while log_envelope(n) > log_eps:
        n += 1
    return n
