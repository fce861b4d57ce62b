# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled kernels for the exponential integral E1 off the branch cut.

Twin of ``bwdecay._kernels_py``: same names, same algorithms, same
convergence budgets, same error type.  Only the inner loops differ, in
that they run on C ``double complex`` without interpreter overhead.
"""

from libc.complex cimport cabs, cexp, clog, creal, cimag

from .errors import ConvergenceError

EULER_GAMMA = 0.57721566490153286
SERIES_RADIUS = 4.0

cdef double _EULER_GAMMA = 0.57721566490153286
cdef double _SERIES_RADIUS = 4.0
cdef double _EPS = 1e-16
cdef double _TINY = 1e-300
cdef int _SERIES_BUDGET = 200
cdef int _CF_BUDGET = 500


cdef double complex _series(double complex z, int* ok) noexcept nogil:
    cdef double complex total = -_EULER_GAMMA - clog(z)
    cdef double complex term = 1.0  # carries z**k / k!
    cdef double complex delta
    cdef int k
    ok[0] = 1
    for k in range(1, _SERIES_BUDGET + 1):
        term = term * z / k
        if k % 2:
            delta = term / k
        else:
            delta = -term / k
        total = total + delta
        if cabs(delta) <= _EPS * cabs(total):
            return total
    ok[0] = 0
    return total


cdef double complex _cf_scaled(double complex z, int* ok) noexcept nogil:
    # Even contraction of the Stieltjes fraction for exp(z)*E1(z),
    # modified Lentz forward recurrence.
    cdef double complex b = z + 1.0
    cdef double complex c = 1.0 / _TINY
    cdef double complex d = 1.0 / b
    cdef double complex f = d
    cdef double complex delta
    cdef double a
    cdef int k
    ok[0] = 1
    for k in range(1, _CF_BUDGET + 1):
        a = -<double> (k * k)
        b = b + 2.0
        d = b + a * d
        if creal(d) == 0.0 and cimag(d) == 0.0:
            d = _TINY
        c = b + a / c
        if creal(c) == 0.0 and cimag(c) == 0.0:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        f = f * delta
        if cabs(delta - 1.0) < _EPS:
            return f
    ok[0] = 0
    return f


def e1_series(double complex z):
    """Power-series evaluation of E1(z); see the pure twin for details."""
    cdef int ok
    cdef double complex val = _series(z, &ok)
    if not ok:
        raise ConvergenceError(
            "E1 power series did not converge at z = {!r} within {} terms".format(
                complex(z), _SERIES_BUDGET
            )
        )
    return val


def e1_cf_scaled(double complex z):
    """Continued-fraction evaluation of exp(z)*E1(z); see the pure twin."""
    cdef int ok
    cdef double complex val = _cf_scaled(z, &ok)
    if not ok:
        raise ConvergenceError(
            "continued fraction for exp(z)*E1(z) stalled at z = {!r} "
            "after {} iterations".format(complex(z), _CF_BUDGET)
        )
    return val


def e1(double complex z):
    """E1(z) by whichever of the two kernels owns the region."""
    cdef int ok
    cdef double complex val
    if cabs(z) <= _SERIES_RADIUS:
        val = _series(z, &ok)
        if not ok:
            raise ConvergenceError(
                "E1 power series did not converge at z = {!r} within {} terms".format(
                    complex(z), _SERIES_BUDGET
                )
            )
        return val
    val = _cf_scaled(z, &ok)
    if not ok:
        raise ConvergenceError(
            "continued fraction for exp(z)*E1(z) stalled at z = {!r} "
            "after {} iterations".format(complex(z), _CF_BUDGET)
        )
    return cexp(-z) * val


def e1_scaled(double complex z):
    """exp(z)*E1(z) without forming exp(z) where it would overflow."""
    cdef int ok
    cdef double complex val
    if cabs(z) <= _SERIES_RADIUS:
        val = _series(z, &ok)
        if not ok:
            raise ConvergenceError(
                "E1 power series did not converge at z = {!r} within {} terms".format(
                    complex(z), _SERIES_BUDGET
                )
            )
        return cexp(z) * val
    val = _cf_scaled(z, &ok)
    if not ok:
        raise ConvergenceError(
            "continued fraction for exp(z)*E1(z) stalled at z = {!r} "
            "after {} iterations".format(complex(z), _CF_BUDGET)
        )
    return val
