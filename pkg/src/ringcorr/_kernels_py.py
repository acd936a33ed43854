"""Pure-Python scalar series kernels.

Reference backend; the compiled backend (_kernels_cy) implements the same
algorithms term for term.  All sums share three rules:

* every term is one exponential of a fully combined exponent, never a
  product of a large and a small factor;
* terms are added in symmetric pairs outward from the envelope peak, so
  evenness in z holds bit for bit;
* the loop stops only past the peak, when a rigorous geometric tail bound
  drops below eps times the partial sum (with a 1e-300 absolute floor).

Each function returns (re, im, terms_used, tail_bound).
"""

import math

from ringcorr.errors import TermCapError

_FLOOR = 1e-300
_TWO_PI = 2.0 * math.pi


def direct_sum(alpha, zr, zi, eps, max_terms):
    """Gaussian-damped cosine series sum_n exp(-alpha n^2/2) cos(n z)."""
    re = 1.0
    im = 0.0
    peak = abs(zi) / alpha
    ay = abs(zi)
    n = 0
    while True:
        n += 1
        if 2 * n + 1 > max_terms:
            raise TermCapError(max_terms, "direct series")
        h = -0.5 * alpha * n * n
        e_m = math.exp(h - n * zi)
        e_p = math.exp(h + n * zi)
        c = math.cos(n * zr)
        s = math.sin(n * zr)
        re += (e_m + e_p) * c
        im += (e_m - e_p) * s
        if n > peak:
            r = math.exp(-alpha * (n + 0.5) + ay)
            if r < 1.0:
                tail = 2.0 * (e_m + e_p) * r / (1.0 - r)
                mag = math.hypot(re, im)
                if not math.isfinite(mag):
                    return re, im, 2 * n + 1, math.inf
                if tail <= eps * mag or tail < _FLOOR:
                    return re, im, 2 * n + 1, tail


def _comb_term(alpha, zr, zi, n):
    # exp(-(z + 2 n pi)^2 / (2 alpha)) split into magnitude and phase
    wr = zr + _TWO_PI * n
    ex_re = -0.5 * (wr * wr - zi * zi) / alpha
    ex_im = -wr * zi / alpha
    m = math.exp(ex_re)
    return m * math.cos(ex_im), m * math.sin(ex_im), m


def poisson_sum(alpha, zr, zi, eps, max_terms):
    """Gaussian comb: sqrt(2 pi/alpha) sum_n exp(-(z + 2 n pi)^2/(2 alpha))."""
    pref = math.sqrt(_TWO_PI / alpha)
    n0 = int(math.floor(-zr / _TWO_PI + 0.5))
    re, im, _ = _comb_term(alpha, zr, zi, n0)
    k = 0
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "comb series")
        ur, ui, ub = _comb_term(alpha, zr, zi, n0 + k)
        dr, di, db = _comb_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        # comb offsets at distance j >= k from center shrink at least by
        # exp(-4 pi^2 k / alpha) per step on either side
        rho = math.exp(-4.0 * math.pi * math.pi * k / alpha)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = math.hypot(re, im)
        if not math.isfinite(mag):
            return pref * re, pref * im, 2 * k + 1, math.inf
        if tail <= eps * mag or tail < _FLOOR:
            return pref * re, pref * im, 2 * k + 1, pref * tail


def half_integer_f(alpha, zr, zi, eps, max_terms):
    """Half-integer form of the phase-shifted kernel F.

    F(z) = sum over nu in {1/2, 3/2, ...} of
           exp(-alpha/8 - alpha nu^2/2) * 2 cos(nu (z - i alpha/2)).
    The constant prefactor exp(-alpha/8) is folded into every exponent;
    at large alpha the factored form would overflow.
    """
    wi = zi - 0.5 * alpha
    awi = abs(wi)
    peak = awi / alpha
    re = 0.0
    im = 0.0
    terms = 0
    nu = -0.5
    while True:
        nu += 1.0
        terms += 2
        if terms > max_terms:
            raise TermCapError(max_terms, "half-integer series")
        h = -0.125 * alpha - 0.5 * alpha * nu * nu
        e_m = math.exp(h - nu * wi)
        e_p = math.exp(h + nu * wi)
        c = math.cos(nu * zr)
        s = math.sin(nu * zr)
        re += (e_m + e_p) * c
        im += (e_m - e_p) * s
        if nu > peak:
            r = math.exp(-alpha * (nu + 0.5) + awi)
            if r < 1.0:
                tail = 2.0 * (e_m + e_p) * r / (1.0 - r)
                mag = math.hypot(re, im)
                if not math.isfinite(mag):
                    return re, im, terms, math.inf
                if tail <= eps * mag or tail < _FLOOR:
                    return re, im, terms, tail


def _g_direct_term(alpha, zr, zi, n):
    # exp(-(alpha/2) (n + i z/alpha)^2); the quadratic prefactor of g is
    # already folded in, so the exponent stays bounded by zr^2/(2 alpha)
    d = n - zi / alpha
    ex_re = -0.5 * alpha * d * d + 0.5 * zr * zr / alpha
    ex_im = -zr * d
    m = math.exp(ex_re)
    return m * math.cos(ex_im), m * math.sin(ex_im), m


def g_direct(alpha, zr, zi, eps, max_terms):
    """Rescaled kernel g(z) = exp(z^2/(2 alpha)) S(alpha, z), direct route."""
    n0 = int(math.floor(zi / alpha + 0.5))
    re, im, _ = _g_direct_term(alpha, zr, zi, n0)
    k = 0
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "rescaled direct series")
        ur, ui, ub = _g_direct_term(alpha, zr, zi, n0 + k)
        dr, di, db = _g_direct_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        rho = math.exp(-alpha * k)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = math.hypot(re, im)
        if not math.isfinite(mag):
            return re, im, 2 * k + 1, math.inf
        if tail <= eps * mag or tail < _FLOOR:
            return re, im, 2 * k + 1, tail


def _g_comb_term(alpha, zr, zi, n):
    # exp(-2 n pi (z + n pi)/alpha): comb form of g with the prefactor folded
    ex_re = -_TWO_PI * n * (zr + math.pi * n) / alpha
    ex_im = -_TWO_PI * n * zi / alpha
    m = math.exp(ex_re)
    return m * math.cos(ex_im), m * math.sin(ex_im), m


def g_poisson(alpha, zr, zi, eps, max_terms):
    """Rescaled kernel g(z), comb route; exactly periodic in Im z."""
    pref = math.sqrt(_TWO_PI / alpha)
    n0 = int(math.floor(-zr / _TWO_PI + 0.5))
    re, im, _ = _g_comb_term(alpha, zr, zi, n0)
    k = 0
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "rescaled comb series")
        ur, ui, ub = _g_comb_term(alpha, zr, zi, n0 + k)
        dr, di, db = _g_comb_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        rho = math.exp(-4.0 * math.pi * math.pi * k / alpha)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = math.hypot(re, im)
        if not math.isfinite(mag):
            return pref * re, pref * im, 2 * k + 1, math.inf
        if tail <= eps * mag or tail < _FLOOR:
            return pref * re, pref * im, 2 * k + 1, pref * tail
