# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled scalar series kernels.

Term-for-term transliteration of _kernels_py; see that module for the
summation and tail-bound rules.  Each function returns
(re, im, terms_used, tail_bound).
"""

from libc.math cimport cos, exp, fabs, floor, hypot, isfinite, sin, sqrt

from ringcorr.errors import TermCapError

cdef double _FLOOR = 1e-300
cdef double _PI = 3.14159265358979323846
cdef double _TWO_PI = 6.28318530717958647692
cdef double _INF = float("inf")


cpdef tuple direct_sum(double alpha, double zr, double zi, double eps, long max_terms):
    cdef double re = 1.0, im = 0.0
    cdef double peak = fabs(zi) / alpha
    cdef double ay = fabs(zi)
    cdef double h, e_m, e_p, c, s, r, tail, mag
    cdef long n = 0
    while True:
        n += 1
        if 2 * n + 1 > max_terms:
            raise TermCapError(max_terms, "direct series")
        h = -0.5 * alpha * n * n
        e_m = exp(h - n * zi)
        e_p = exp(h + n * zi)
        c = cos(n * zr)
        s = sin(n * zr)
        re += (e_m + e_p) * c
        im += (e_m - e_p) * s
        if n > peak:
            r = exp(-alpha * (n + 0.5) + ay)
            if r < 1.0:
                tail = 2.0 * (e_m + e_p) * r / (1.0 - r)
                mag = hypot(re, im)
                if not isfinite(mag):
                    return re, im, 2 * n + 1, _INF
                if tail <= eps * mag or tail < _FLOOR:
                    return re, im, 2 * n + 1, tail


cdef inline (double, double, double) _comb_term(double alpha, double zr, double zi, long n):
    cdef double wr = zr + _TWO_PI * n
    cdef double ex_re = -0.5 * (wr * wr - zi * zi) / alpha
    cdef double ex_im = -wr * zi / alpha
    cdef double m = exp(ex_re)
    return m * cos(ex_im), m * sin(ex_im), m


cpdef tuple poisson_sum(double alpha, double zr, double zi, double eps, long max_terms):
    cdef double pref = sqrt(_TWO_PI / alpha)
    cdef long n0 = <long>floor(-zr / _TWO_PI + 0.5)
    cdef double re, im, ur, ui, ub, dr, di, db, rho, tail, mag, _b
    cdef long k = 0
    re, im, _b = _comb_term(alpha, zr, zi, n0)
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "comb series")
        ur, ui, ub = _comb_term(alpha, zr, zi, n0 + k)
        dr, di, db = _comb_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        rho = exp(-4.0 * _PI * _PI * k / alpha)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = hypot(re, im)
        if not isfinite(mag):
            return pref * re, pref * im, 2 * k + 1, _INF
        if tail <= eps * mag or tail < _FLOOR:
            return pref * re, pref * im, 2 * k + 1, pref * tail


cpdef tuple half_integer_f(double alpha, double zr, double zi, double eps, long max_terms):
    cdef double wi = zi - 0.5 * alpha
    cdef double awi = fabs(wi)
    cdef double peak = awi / alpha
    cdef double re = 0.0, im = 0.0
    cdef double nu = -0.5
    cdef double h, e_m, e_p, c, s, r, tail, mag
    cdef long terms = 0
    while True:
        nu += 1.0
        terms += 2
        if terms > max_terms:
            raise TermCapError(max_terms, "half-integer series")
        h = -0.125 * alpha - 0.5 * alpha * nu * nu
        e_m = exp(h - nu * wi)
        e_p = exp(h + nu * wi)
        c = cos(nu * zr)
        s = sin(nu * zr)
        re += (e_m + e_p) * c
        im += (e_m - e_p) * s
        if nu > peak:
            r = exp(-alpha * (nu + 0.5) + awi)
            if r < 1.0:
                tail = 2.0 * (e_m + e_p) * r / (1.0 - r)
                mag = hypot(re, im)
                if not isfinite(mag):
                    return re, im, terms, _INF
                if tail <= eps * mag or tail < _FLOOR:
                    return re, im, terms, tail


cdef inline (double, double, double) _g_direct_term(double alpha, double zr, double zi, long n):
    cdef double d = n - zi / alpha
    cdef double ex_re = -0.5 * alpha * d * d + 0.5 * zr * zr / alpha
    cdef double ex_im = -zr * d
    cdef double m = exp(ex_re)
    return m * cos(ex_im), m * sin(ex_im), m


cpdef tuple g_direct(double alpha, double zr, double zi, double eps, long max_terms):
    cdef long n0 = <long>floor(zi / alpha + 0.5)
    cdef double re, im, ur, ui, ub, dr, di, db, rho, tail, mag, _b
    cdef long k = 0
    re, im, _b = _g_direct_term(alpha, zr, zi, n0)
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "rescaled direct series")
        ur, ui, ub = _g_direct_term(alpha, zr, zi, n0 + k)
        dr, di, db = _g_direct_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        rho = exp(-alpha * k)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = hypot(re, im)
        if not isfinite(mag):
            return re, im, 2 * k + 1, _INF
        if tail <= eps * mag or tail < _FLOOR:
            return re, im, 2 * k + 1, tail


cdef inline (double, double, double) _g_comb_term(double alpha, double zr, double zi, long n):
    cdef double ex_re = -_TWO_PI * n * (zr + _PI * n) / alpha
    cdef double ex_im = -_TWO_PI * n * zi / alpha
    cdef double m = exp(ex_re)
    return m * cos(ex_im), m * sin(ex_im), m


cpdef tuple g_poisson(double alpha, double zr, double zi, double eps, long max_terms):
    cdef double pref = sqrt(_TWO_PI / alpha)
    cdef long n0 = <long>floor(-zr / _TWO_PI + 0.5)
    cdef double re, im, ur, ui, ub, dr, di, db, rho, tail, mag, _b
    cdef long k = 0
    re, im, _b = _g_comb_term(alpha, zr, zi, n0)
    while True:
        k += 1
        if 2 * k + 1 > max_terms:
            raise TermCapError(max_terms, "rescaled comb series")
        ur, ui, ub = _g_comb_term(alpha, zr, zi, n0 + k)
        dr, di, db = _g_comb_term(alpha, zr, zi, n0 - k)
        re += ur + dr
        im += ui + di
        rho = exp(-4.0 * _PI * _PI * k / alpha)
        tail = (ub + db) * rho / (1.0 - rho)
        mag = hypot(re, im)
        if not isfinite(mag):
            return pref * re, pref * im, 2 * k + 1, _INF
        if tail <= eps * mag or tail < _FLOOR:
            return pref * re, pref * im, 2 * k + 1, pref * tail
