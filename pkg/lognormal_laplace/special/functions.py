"""
Complex special functions with the error contract of the package: poles and
overflow surface as exceptions, never as NaN or infinity.
"""
import cmath
import math
from typing import Optional

import mpmath
from numpy.polynomial import hermite_e
from scipy import special

from lognormal_laplace.utils.errors import (
    DegreeError,
    ErfcOverflowError,
    NonConvergence,
    NonFiniteError,
    PoleError,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import get_logger

logger = get_logger(__name__)

HERMITE_MAX_DEGREE = 64
POLE_TOLERANCE = 1e-300
SERIES_MAX_TERMS = 500


def _check_pole(s: complex, source: str):
    if s.imag == 0 and s.real <= 0 and abs(s.real - round(s.real)) <= POLE_TOLERANCE:
        raise PoleError(source, f's = {s}')


def _finite(value, source: str, argument) -> complex:
    value = complex(value)
    if not cmath.isfinite(value):
        raise NonFiniteError(source, f'argument {argument}')
    return value


def gamma_complex(s: complex) -> complex:
    """Gamma on the whole plane; the left half-plane goes through reflection inside scipy."""
    s = complex(s)
    _check_pole(s, 'gamma_complex')
    return _finite(special.gamma(s), 'gamma_complex', s)


def log_gamma_complex(s: complex) -> complex:
    """Principal branch of log Gamma, continuous off the negative real axis."""
    s = complex(s)
    _check_pole(s, 'log_gamma_complex')
    return _finite(special.loggamma(s), 'log_gamma_complex', s)


def erfc_complex(w: complex) -> complex:
    w = complex(w)
    value = complex(special.erfc(w))
    if not cmath.isfinite(value):
        raise ErfcOverflowError('erfc_complex', f'w = {w}, use log_erfcx')
    return value


def erfcx_complex(w: complex) -> complex:
    """erfcx(w) = e^{w^2} erfc(w), bounded on Re w >= 0."""
    w = complex(w)
    return _finite(special.erfcx(w), 'erfcx_complex', w)


def log_erfcx(w: complex) -> complex:
    """
    log erfcx(w) on the whole plane. The imaginary part is defined modulo 2 pi.
    For Re w < 0 the reflection erfc(w) = 2 - erfc(-w) is used without forming
    e^{w^2} or erfc(-w) when either would overflow.
    """
    w = complex(w)
    if w.real >= 0:
        return cmath.log(erfcx_complex(w))
    log_erfcx_reflected = cmath.log(erfcx_complex(-w))
    # log erfc(-w)
    r = log_erfcx_reflected - w * w
    if r.real <= 0:
        return w * w + _log_or_neg_inf(2 - cmath.exp(r))
    return log_erfcx_reflected + _log_or_neg_inf(2 * cmath.exp(-r) - 1)


def log_erfc(w: complex) -> complex:
    w = complex(w)
    return log_erfcx(w) - w * w


def _log_or_neg_inf(value: complex) -> complex:
    if value == 0:
        return complex(-math.inf, 0.0)
    return cmath.log(value)


def hermite_prob(m: int, x: complex) -> complex:
    """Probabilist's Hermite polynomial He_m(x)."""
    if m < 0:
        raise ValidationFailedError('hermite_prob', f'degree must be >= 0, got {m}')
    if m > HERMITE_MAX_DEGREE:
        raise DegreeError('hermite_prob', f'degree {m} > {HERMITE_MAX_DEGREE}')
    x = complex(x)
    coefficients = [0] * m + [1]
    value = hermite_e.hermeval(x, coefficients)
    return _finite(value, 'hermite_prob', x)


def incomplete_gamma_pair(
    s: complex, alpha: float, max_terms: Optional[int] = None
) -> tuple[complex, complex]:
    """
    The lower and upper incomplete gammas split at alpha.
    Args:
        s:complex: order, off the nonpositive integers
        alpha:float: split point, >= 1
        max_terms:Optional[int]: term budget of the lower series

    Returns:
        (lower, upper) with lower from the alternating power series and
        upper = Gamma(s) - lower.
    """
    s = complex(s)
    if not alpha >= 1:
        raise ValidationFailedError('incomplete_gamma_pair', f'alpha must be >= 1, got {alpha}')
    _check_pole(s, 'incomplete_gamma_pair')
    lower = lower_gamma_series(s, alpha, max_terms)
    return lower, gamma_complex(s) - lower


def lower_gamma_series(s: complex, alpha: float, max_terms: Optional[int] = None) -> complex:
    """
    sum_{n>=0} (-1)^n alpha^{s+n} / (n! (s+n)).

    The terms grow to about e^alpha before decaying, so the sum runs in mpmath with
    the working precision raised by the digits the cancellation costs.
    """
    s = complex(s)
    _check_pole(s, 'lower_gamma_series')
    max_terms = max_terms or SERIES_MAX_TERMS
    lost = (alpha + abs(s.real * math.log(alpha)) + math.pi * abs(s.imag) / 2) / math.log(10)
    with mpmath.workdps(25 + int(math.ceil(lost))):
        a = mpmath.mpf(alpha)
        order = mpmath.mpc(s.real, s.imag)
        scale = mpmath.power(a, order)
        target = mpmath.mpf(2) ** -60
        coefficient = mpmath.mpf(1)  # (-alpha)^n / n!
        total = mpmath.mpc(0)
        for n in range(max_terms):
            total += scale * coefficient / (order + n)
            coefficient *= -a / (n + 1)
            if n + 2 > alpha:
                # terms decrease from here on with ratio below alpha / (n + 2)
                ratio = a / (n + 2)
                next_term = abs(scale * coefficient / (order + n + 1))
                if next_term / (1 - ratio) <= target * abs(total):
                    logger.debug('lower gamma series converged after %s terms', n + 1)
                    return complex(total)
    raise NonConvergence(
        'lower_gamma_series', f's = {s}, alpha = {alpha}', max_terms=max_terms
    )
