"""Closed-form survival amplitude and effective Hamiltonian.

For a truncated Breit-Wigner state the survival amplitude reduces to two
complex integrals over the dimensionless energy eta = (E - Emin)/gamma0,

    I(tau) = integral of exp(-i eta tau) / (eta**2 + 1/4)   over (-beta, inf),
    J(tau) = integral of eta exp(-i eta tau) / (eta**2 + 1/4) over (-beta, inf),

both expressible through the exponential integral E1 at the conjugate
pole positions

    z+ = tau/2 - i beta tau,      z- = -tau/2 - i beta tau.

Everything here is organized around the scaled G(z) = exp(z) E1(z) so
that the exponentially small and the power-law contributions are formed
separately and summed last:

    I(tau) = 2 pi exp(-tau/2) + i exp(i beta tau) (G(z-) - G(z+)),
    J(tau) = -i pi exp(-tau/2) + (1/2) exp(i beta tau) (G(z+) + G(z-)).

The first term underflows harmlessly to zero near tau ~ 1400 while the
second keeps full relative accuracy, so the late-time power law is
computed far beyond the exponential underflow point.

Phase convention: the amplitude returned here is (N/2pi) exp(-i beta
tau) I(tau); the remaining global phase exp(-i Emin t / hbar) is
dropped.  Only |a|**2, E(t), gamma(t) and kappa(t) are physical
observables, so the phase origin is documented rather than load-bearing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NearZeroAmplitude
from .model import BreitWignerModel
from .special import exp_integral_e1_scaled

_TWO_PI = 2.0 * math.pi

# Below this the ratio J/I is numerically meaningless: the amplitude
# modulus is ~ 1e-280 / 2 pi, deep under any physical interpretation.
_NEAR_ZERO = 1e-280


@dataclass(frozen=True)
class AmplitudeValue:
    """Survival amplitude at one dimensionless time.

    Invariant: ``abs(value) <= 1 + 1e-9`` (probability conservation, up
    to roundoff).
    """

    value: complex
    tau: float

    @property
    def probability(self) -> float:
        """|value|**2, clipped into [0, 1]."""
        return min(abs(self.value) ** 2, 1.0)


@dataclass(frozen=True)
class EffectiveHamiltonianValue:
    """Instantaneous energy and decay rate at one dimensionless time.

    ``energy`` is (E(t) - Emin)/gamma0, i.e. measured from the spectrum
    edge in units of the width; ``rate`` is gamma(t)/gamma0.  Together
    they reproduce the complex effective Hamiltonian through
    h = E - (i/2) gamma, exposed as the ``h`` property (same units and
    origin as ``energy``).
    """

    energy: float
    rate: float
    tau: float

    @property
    def h(self) -> complex:
        return complex(self.energy, -0.5 * self.rate)


def _check_beta(beta: float) -> None:
    if not (isinstance(beta, (int, float)) and math.isfinite(beta) and beta > 0):
        raise DomainError("beta must be a finite positive real, got {!r}".format(beta))


def _check_positive_tau(tau: float, hint: str = "") -> None:
    if not (isinstance(tau, (int, float)) and math.isfinite(tau) and tau > 0):
        raise DomainError("tau must be a finite positive real, got {!r}{}".format(tau, hint))


def _g_pair(beta: float, tau: float) -> tuple[complex, complex]:
    # G at the two pole images; z+ sits in the fourth quadrant, z- in
    # the third, both a fixed angle arctan(2 beta) away from the cut.
    g_plus = exp_integral_e1_scaled(complex(0.5 * tau, -beta * tau))
    g_minus = exp_integral_e1_scaled(complex(-0.5 * tau, -beta * tau))
    return g_plus, g_minus


def i_beta_at_zero(beta: float) -> float:
    """Limit of i_beta as tau -> 0+, namely pi + 2 arctan(2 beta).

    Exposed separately because i_beta itself cannot be evaluated at
    tau = 0 (E1 diverges there; the divergences cancel only in the
    limit).
    """
    _check_beta(beta)
    return math.pi + 2.0 * math.atan(2.0 * beta)


def i_beta(beta: float, tau: float) -> complex:
    """Amplitude integral I(tau) for a given beta.

    Parameters
    ----------
    beta : float
        Resonance position above the spectrum edge in widths, > 0.
    tau : float
        Dimensionless time, > 0.  The tau -> 0+ limit is available as
        :func:`i_beta_at_zero`.

    Returns
    -------
    complex
        I(tau); N/(2 pi) times this, dephased, is the amplitude.
    """
    _check_beta(beta)
    _check_positive_tau(tau, hint=" (the tau -> 0 limit is i_beta_at_zero)")
    if tau < 1e-300:
        # the components of tau/2 - i*beta*tau denormalize here and the
        # two E1 arguments collapse onto each other; the true deviation
        # from the limit is O(tau*ln tau), far below one ulp of it
        return complex(i_beta_at_zero(beta), 0.0)
    g_plus, g_minus = _g_pair(beta, tau)
    phase = cmath.exp(1j * beta * tau)
    return _TWO_PI * math.exp(-0.5 * tau) + 1j * phase * (g_minus - g_plus)


def j_beta(beta: float, tau: float) -> complex:
    """Energy-weighted integral J(tau) = i dI/dtau.

    Diverges logarithmically as tau -> 0+ (the integrand falls off only
    like 1/eta), hence tau > 0 strictly.
    """
    _check_beta(beta)
    _check_positive_tau(tau, hint=" (J diverges logarithmically at tau = 0)")
    g_plus, g_minus = _g_pair(beta, tau)
    phase = cmath.exp(1j * beta * tau)
    return -1j * math.pi * math.exp(-0.5 * tau) + 0.5 * phase * (g_plus + g_minus)


def chi(beta: float, tau: float) -> complex:
    """Non-exponentiality witness exp(tau) E1(z+) - E1(z-).

    The amplitude is exactly canonical (pure exponential decay) at a
    given tau only where this vanishes; its non-constancy on every
    interval is what rules out a finite exponential window.  Grows like
    exp(tau/2)/tau at late times, so a genuine OverflowError occurs past
    tau ~ 1400.
    """
    _check_beta(beta)
    _check_positive_tau(tau)
    g_plus, g_minus = _g_pair(beta, tau)
    return math.exp(0.5 * tau) * cmath.exp(1j * beta * tau) * (g_plus - g_minus)


def chi_derivative(beta: float, tau: float) -> complex:
    """d chi / d tau = exp(tau) E1(z+), nonzero except at isolated tau."""
    _check_beta(beta)
    _check_positive_tau(tau)
    g_plus, _ = _g_pair(beta, tau)
    return math.exp(0.5 * tau) * cmath.exp(1j * beta * tau) * g_plus


def amplitude(model: BreitWignerModel, tau: float) -> AmplitudeValue:
    """Survival amplitude a(tau) of the truncated Breit-Wigner state.

    Parameters
    ----------
    model : BreitWignerModel
        Physical parameters; only beta and the normalization enter.
    tau : float
        Dimensionless time, >= 0.

    Returns
    -------
    AmplitudeValue
        a(tau) with ``a(0) = 1`` exactly (the defining normalization;
        the E1 divergences at tau = 0 cancel analytically, so the point
        is special-cased rather than evaluated as a limit).
    """
    if tau == 0:
        return AmplitudeValue(complex(1.0, 0.0), 0.0)
    val = (model.normalization() / _TWO_PI) \
        * cmath.exp(-1j * model.beta * tau) * i_beta(model.beta, tau)
    return AmplitudeValue(val, float(tau))


def survival_probability(model: BreitWignerModel, tau: float) -> float:
    """Decay law P(tau) = |a(tau)|**2, clipped into [0, 1]."""
    return amplitude(model, tau).probability


def _j_over_i(beta: float, tau: float) -> complex:
    _check_beta(beta)
    _check_positive_tau(tau, hint=" (the mean energy diverges at t = 0)")
    g_plus, g_minus = _g_pair(beta, tau)
    phase = cmath.exp(1j * beta * tau)
    decay = math.exp(-0.5 * tau)
    i_val = _TWO_PI * decay + 1j * phase * (g_minus - g_plus)
    j_val = -1j * math.pi * decay + 0.5 * phase * (g_plus + g_minus)
    if abs(i_val) < _NEAR_ZERO:
        raise NearZeroAmplitude(
            "|I({})| = {:.3e} is below 1e-280; the ratio J/I is unreliable "
            "this deep into underflow".format(tau, abs(i_val))
        )
    return j_val / i_val


def effective_hamiltonian(model: BreitWignerModel, tau: float,
                          route: str = "ratio") -> EffectiveHamiltonianValue:
    """Instantaneous effective Hamiltonian h(tau), split into (E, gamma).

    Parameters
    ----------
    model : BreitWignerModel
    tau : float
        Dimensionless time, > 0.  At t = 0 the Breit-Wigner mean energy
        diverges logarithmically, so the API refuses the point instead
        of returning a large number.
    route : {"ratio", "brace"}
        Two algebraically equivalent closed forms kept deliberately
        separate as a cross-check.  "ratio" forms h = E0 + gamma0 J/I
        and works arbitrarily late (underflow-safe).  "brace" evaluates
        the same quantity from the unscaled brace combination exp(tau)
        E1(z+) +/- E1(z-) and overflows past tau ~ 1400; it exists to
        catch algebra or implementation errors in "ratio", not for
        production use.

    Returns
    -------
    EffectiveHamiltonianValue
        energy = (E(tau) - Emin)/gamma0 and rate = gamma(tau)/gamma0.

    Raises
    ------
    DomainError
        For tau <= 0 or an unknown route.
    NearZeroAmplitude
        When |I| < 1e-280 and the ratio would be garbage.
    """
    beta = model.beta
    if route == "ratio":
        r = _j_over_i(beta, tau)
        return EffectiveHamiltonianValue(energy=beta + r.real,
                                         rate=-2.0 * r.imag, tau=float(tau))
    if route == "brace":
        _check_beta(beta)
        _check_positive_tau(tau, hint=" (the mean energy diverges at t = 0)")
        g_plus, g_minus = _g_pair(beta, tau)
        # exp(tau/2) overflows past tau ~ 1419; genuine limit of this route.
        grow = math.exp(0.5 * tau) * cmath.exp(1j * beta * tau)
        s_plus = grow * g_plus
        s_minus = grow * g_minus
        coef = 1j / _TWO_PI
        numer = 1.0 + coef * (s_plus + s_minus)
        denom = 1.0 - coef * (s_plus - s_minus)
        if abs(denom) < _NEAR_ZERO:
            raise NearZeroAmplitude(
                "brace denominator vanished at tau = {}".format(tau)
            )
        h_rel = beta - 0.5j * (numer / denom)
        return EffectiveHamiltonianValue(energy=h_rel.real,
                                         rate=-2.0 * h_rel.imag, tau=float(tau))
    raise DomainError("route must be 'ratio' or 'brace', got {!r}".format(route))


def kappa(model: BreitWignerModel, tau: float) -> float:
    """Normalized instantaneous energy (E(tau) - Emin)/(E0 - Emin).

    Equals 1 + Re[J/I]/beta; starts near 1 in the canonical era and
    tends to 0 (energy relaxes to the spectrum edge) as tau -> inf.
    """
    return 1.0 + _j_over_i(model.beta, tau).real / model.beta
