"""Late-time asymptotic expansions and the Lambda(t) coefficient map.

Repeated integration by parts of the amplitude integrals at the lower
limit eta = -beta produces, with D = beta**2 + 1/4 and x = i/tau,

    I(tau) ~ x exp(i beta tau)/D * sum_k ci_k x**k,
    J(tau) ~ x exp(i beta tau)/D * sum_k cj_k x**k,
    J/I    ~ sum_k cr_k x**k,

with five coefficients retained per series.  The brace coefficients
ci_k, cj_k come out of the boundary derivatives of 1/(eta**2 + 1/4) and
eta/(eta**2 + 1/4); the ratio coefficients follow by long division.

A note on the ratio's third and fourth coefficients: the widely quoted
closed forms (1+24b-28b**2-96b**3+64b**4)/(4 D**3) and
(6-21b+48b**2-64b**3-288b**4+464b**5)/(4 D**4) are incorrect except at
beta = 1; regenerating the division gives (1-8b**2)/D**2 and
b(44b**2-15)/D**3.  This module evaluates the regenerated values;
the quoted forms remain available as ratio_coefficients_legacy so the
discrepancy stays visible and tested rather than silently patched.

These are asymptotic, not convergent, series: past the optimal
truncation index the terms grow again.  Evaluations where the last
retained term exceeds the previous one emit AsymptoticRangeWarning
instead of failing, since that regime is sometimes probed on purpose.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass

from .errors import DomainError
from .model import BreitWignerModel

_TWO_PI = 2.0 * math.pi


class AsymptoticRangeWarning(UserWarning):
    """Last retained term grew: outside the series' reliable region."""


class SeriesKind(enum.Enum):
    I_SERIES = "i"
    J_SERIES = "j"
    RATIO = "ratio"
    AMPLITUDE = "amplitude"
    ENERGY = "energy"
    RATE = "rate"


@dataclass(frozen=True)
class AsymptoticSeries:
    """Truncated coefficient list for one late-time expansion.

    ``coefficients`` multiply powers of i/tau (I_SERIES, J_SERIES,
    RATIO, AMPLITUDE braces) or of 1/tau (ENERGY, RATE); ``order`` is
    the retained term count.
    """

    coefficients: tuple
    order: int
    kind: SeriesKind

    def __post_init__(self):
        if self.order < 1 or self.order > len(self.coefficients):
            raise DomainError(
                "order must be in 1..{}, got {!r}".format(
                    len(self.coefficients), self.order
                )
            )
        for c in self.coefficients:
            if not (math.isfinite(complex(c).real) and math.isfinite(complex(c).imag)):
                raise DomainError("non-finite series coefficient {!r}".format(c))


@dataclass(frozen=True)
class LambdaCoefficients:
    """Coefficients of Lambda(t) = lambda_bare + big_d2/t**2 + big_d4/t**4.

    Invariant: big_dk = (8 pi G / c**2) * dk, the same conversion that
    maps the bare energy density onto lambda_bare.
    """

    lambda_bare: float
    d2: float
    d4: float
    big_d2: float
    big_d4: float


def _check_beta_tau(beta: float, tau: float) -> None:
    if not (isinstance(beta, (int, float)) and math.isfinite(beta) and beta > 0):
        raise DomainError("beta must be a finite positive real, got {!r}".format(beta))
    if not (isinstance(tau, (int, float)) and math.isfinite(tau) and tau > 0):
        raise DomainError("tau must be a finite positive real, got {!r}".format(tau))


def _check_order(order: int, top: int) -> None:
    if not (isinstance(order, int) and 1 <= order <= top):
        raise DomainError("order must be an integer in 1..{}, got {!r}".format(top, order))


def i_brace_coefficients(beta: float) -> tuple:
    """Five brace coefficients of the I expansion, in powers of i/tau."""
    d = beta * beta + 0.25
    b2 = beta * beta / d
    return (
        -1.0,
        2.0 * beta / d,
        (2.0 / d) * (1.0 - 4.0 * b2),
        (24.0 * beta / (d * d)) * (2.0 * b2 - 1.0),
        (24.0 / (d * d)) * (-16.0 * b2 * b2 + 12.0 * b2 - 1.0),
    )


def j_brace_coefficients(beta: float) -> tuple:
    """Five brace coefficients of the J expansion, in powers of i/tau."""
    d = beta * beta + 0.25
    b2 = beta * beta / d
    return (
        beta,
        1.0 - 2.0 * b2,
        (2.0 * beta / d) * (4.0 * b2 - 3.0),
        (6.0 / d) * (-8.0 * b2 * b2 + 8.0 * b2 - 1.0),
        (24.0 * beta / (d * d)) * (16.0 * b2 * b2 - 20.0 * b2 + 5.0),
    )


def ratio_coefficients(beta: float) -> tuple:
    """Five coefficients of J/I in powers of i/tau (regenerated values)."""
    d = beta * beta + 0.25
    return (
        -beta,
        -1.0,
        2.0 * beta / d,
        (1.0 - 8.0 * beta * beta) / (d * d),
        beta * (44.0 * beta * beta - 15.0) / (d * d * d),
    )


def ratio_coefficients_legacy(beta: float) -> tuple:
    """The widely quoted closed forms for the J/I coefficients.

    Coefficients 0..2 agree with :func:`ratio_coefficients`; 3 and 4
    differ everywhere except beta = 1 and are kept only so the
    discrepancy can be demonstrated.  Do not evaluate series with
    these.
    """
    d = beta * beta + 0.25
    poly3 = 1.0 + 24.0 * beta - 28.0 * beta ** 2 - 96.0 * beta ** 3 + 64.0 * beta ** 4
    poly4 = (6.0 - 21.0 * beta + 48.0 * beta ** 2 - 64.0 * beta ** 3
             - 288.0 * beta ** 4 + 464.0 * beta ** 5)
    return (
        -beta,
        -1.0,
        2.0 * beta / d,
        poly3 / (4.0 * d ** 3),
        poly4 / (4.0 * d ** 4),
    )


def series_coefficients(kind: SeriesKind, beta: float, order: int | None = None) -> AsymptoticSeries:
    """Coefficient table for a given series kind, optionally truncated.

    ENERGY coefficients are for (E - Emin)/gamma0 in powers of 1/tau;
    RATE for gamma/gamma0 likewise.  The complex kinds carry their
    documented prefactors separately (see the evaluators).
    """
    _check_beta_tau(beta, 1.0)
    cr = ratio_coefficients(beta)
    table = {
        SeriesKind.I_SERIES: i_brace_coefficients(beta),
        SeriesKind.J_SERIES: j_brace_coefficients(beta),
        SeriesKind.RATIO: cr,
        SeriesKind.AMPLITUDE: i_brace_coefficients(beta),
        SeriesKind.ENERGY: (0.0, 0.0, -cr[2], 0.0, cr[4]),
        SeriesKind.RATE: (0.0, -2.0 * cr[1], 0.0, 2.0 * cr[3], 0.0),
    }
    coeffs = table[kind]
    if order is None:
        order = len(coeffs)
    _check_order(order, len(coeffs))
    return AsymptoticSeries(coefficients=coeffs[:order], order=order, kind=kind)


def _horner_with_flag(coeffs: tuple, x: complex, tau: float, kind: SeriesKind) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    if len(coeffs) >= 2:
        scale = abs(x)
        last = abs(coeffs[-1]) * scale ** (len(coeffs) - 1)
        prev = abs(coeffs[-2]) * scale ** (len(coeffs) - 2)
        if last > prev:
            warnings.warn(
                "{} series at tau = {:g}: last retained term ({:.3e}) exceeds "
                "the previous one ({:.3e}); outside the reliable region".format(
                    kind.name, tau, last, prev
                ),
                AsymptoticRangeWarning,
                stacklevel=3,
            )
    return acc


def i_series(beta: float, tau: float, order: int) -> complex:
    """Late-time I(tau) truncated to ``order`` terms (1..5)."""
    _check_beta_tau(beta, tau)
    _check_order(order, 5)
    d = beta * beta + 0.25
    x = 1j / tau
    brace = _horner_with_flag(i_brace_coefficients(beta)[:order], x, tau,
                              SeriesKind.I_SERIES)
    return x * cmath.exp(1j * beta * tau) / d * brace


def j_series(beta: float, tau: float, order: int) -> complex:
    """Late-time J(tau) truncated to ``order`` terms (1..5)."""
    _check_beta_tau(beta, tau)
    _check_order(order, 5)
    d = beta * beta + 0.25
    x = 1j / tau
    brace = _horner_with_flag(j_brace_coefficients(beta)[:order], x, tau,
                              SeriesKind.J_SERIES)
    return x * cmath.exp(1j * beta * tau) / d * brace


def ratio_series(beta: float, tau: float, order: int) -> complex:
    """Late-time J/I truncated to ``order`` terms (1..5).

    Order 1 is the constant -beta; each further term adds one power of
    i/tau with the regenerated coefficients.
    """
    _check_beta_tau(beta, tau)
    _check_order(order, 5)
    x = 1j / tau
    return _horner_with_flag(ratio_coefficients(beta)[:order], x, tau,
                             SeriesKind.RATIO)


def amplitude_late(model: BreitWignerModel, tau: float, order: int) -> complex:
    """Late-time survival amplitude truncated to ``order`` terms (1..4).

    Same phase convention as the exact amplitude; the exp(i beta tau)
    factor of the I expansion cancels against the amplitude's
    exp(-i beta tau) exactly, leaving (N/(2 pi D)) * (i/tau) times the
    truncated brace.  |a_lt|**2 falls off as 1/tau**2 at leading order.
    """
    beta = model.beta
    _check_beta_tau(beta, tau)
    _check_order(order, 4)
    d = beta * beta + 0.25
    x = 1j / tau
    brace = _horner_with_flag(i_brace_coefficients(beta)[:order], x, tau,
                              SeriesKind.AMPLITUDE)
    return model.normalization() / (_TWO_PI * d) * x * brace


def energy_late(model: BreitWignerModel, tau: float) -> float:
    """Late-time instantaneous energy, physical units.

    Only even powers of i/tau in the ratio series are real, and the
    constant -beta cancels the beta of E = Emin + gamma0 (beta +
    Re[J/I]) exactly, so the late-time energy relaxes to Emin like
    1/tau**2 from below.
    """
    beta = model.beta
    _check_beta_tau(beta, tau)
    c = ratio_coefficients(beta)
    correction = -c[2] / tau ** 2 + c[4] / tau ** 4
    return model.emin + model.gamma0 * correction


def decay_rate_late(model: BreitWignerModel, tau: float) -> float:
    """Late-time instantaneous decay rate, physical units.

    Odd powers of i/tau in the ratio series are imaginary; with
    gamma = -2 gamma0 Im[J/I] they give 2 gamma0/tau at leading order,
    independent of beta, plus a 1/tau**3 correction.
    """
    beta = model.beta
    _check_beta_tau(beta, tau)
    c = ratio_coefficients(beta)
    return model.gamma0 * (-2.0 * c[1] / tau + 2.0 * c[3] / tau ** 3)


def lambda_of_t(rho_bare: float, d2: float, d4: float, t: float,
                g_newton: float = 1.0, light_speed: float = 1.0) -> float:
    """Running cosmological-constant value Lambda(t).

    Maps a decaying energy density rho(t) = rho_bare + d2/t**2 + d4/t**4
    onto Lambda(t) = (8 pi G / c**2) rho(t).  The coefficients d2, d4
    are free inputs here; nothing in this package pins them to the
    energy expansion beyond proportionality.
    """
    if not (isinstance(t, (int, float)) and math.isfinite(t) and t > 0):
        raise DomainError("t must be a finite positive real, got {!r}".format(t))
    if g_newton <= 0 or light_speed <= 0:
        raise DomainError("G and c must be positive")
    factor = 8.0 * math.pi * g_newton / light_speed ** 2
    return factor * (rho_bare + d2 / t ** 2 + d4 / t ** 4)


def lambda_coefficients(rho_bare: float, d2: float, d4: float,
                        g_newton: float = 1.0,
                        light_speed: float = 1.0) -> LambdaCoefficients:
    """Bundle the Lambda(t) coefficient map without evaluating it."""
    if g_newton <= 0 or light_speed <= 0:
        raise DomainError("G and c must be positive")
    factor = 8.0 * math.pi * g_newton / light_speed ** 2
    return LambdaCoefficients(
        lambda_bare=factor * rho_bare,
        d2=d2,
        d4=d4,
        big_d2=factor * d2,
        big_d4=factor * d4,
    )
