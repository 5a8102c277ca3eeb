"""
Mellin-Barnes representation

    phi(z) = (1 / 2 pi i) int_{k - i inf}^{k + i inf} Gamma(s) e^{-(mu + ln z) s + sigma^2 s^2 / 2} ds,  k > 0,

discretized by the trapezoid rule on a truncated vertical line.
"""
import cmath
import math
from pathlib import Path
from typing import Optional

import numpy as np
import ujson
from scipy import special

from lognormal_laplace.config import Config, default_config
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.models.approx import ApproxResult
from lognormal_laplace.models.complex_plane import ContourSpec, CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.quadrature.vertical import vertical_trapezoid
from lognormal_laplace.special.functions import gamma_complex, log_gamma_complex
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    ContourError,
    NonFiniteError,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import get_logger

logger = get_logger(__name__)


def _contour(
    log_z: complex,
    params: LognormalParams,
    contour: Optional[ContourSpec],
    config: Config,
    source: str,
) -> ContourSpec:
    contour = contour or ContourSpec.for_log(log_z, params.sigma, config=config)
    if contour.k <= 0:
        raise ContourError(source, f'abscissa k = {contour.k} must be > 0')
    return contour


def _log_integrand(log_z: complex, params: LognormalParams):
    L = params.mu + complex(log_z)
    half_s2 = params.sigma**2 / 2

    def log_f(s: np.ndarray) -> np.ndarray:
        return special.loggamma(s) - L * s + half_s2 * s * s

    return log_f


def mellin_barnes_log_transform(
    log_z: complex,
    params: LognormalParams,
    contour: Optional[ContourSpec] = None,
    config: Optional[Config] = None,
) -> complex:
    """
    The Mellin-Barnes integral at an explicit logarithm of z, so sheets beyond the
    principal one are reachable (ln z = ln t + 3 i pi / 2 for instance).
    """
    config = config or default_config()
    contour = _contour(log_z, params, contour, config, 'mellin_barnes_transform')
    return vertical_trapezoid(
        _log_integrand(log_z, params), contour, config, source='mellin_barnes_transform'
    )


def mellin_barnes_transform(
    point: CutPlanePoint,
    params: LognormalParams,
    contour: Optional[ContourSpec] = None,
    config: Optional[Config] = None,
) -> complex:
    return mellin_barnes_log_transform(point.log(), params, contour, config)


def mellin_barnes_derivative(
    point: CutPlanePoint,
    params: LognormalParams,
    contour: Optional[ContourSpec] = None,
    config: Optional[Config] = None,
) -> complex:
    """phi'(z), the integrand multiplied by -s / z."""
    config = config or default_config()
    log_z = point.log()
    contour = _contour(log_z, params, contour, config, 'mellin_barnes_derivative')
    log_f = _log_integrand(log_z, params)

    def log_derivative(s: np.ndarray) -> np.ndarray:
        return log_f(s) + np.log(-s) - log_z

    return vertical_trapezoid(log_derivative, contour, config, source='mellin_barnes_derivative')


def mellin_closed_form(s: complex, params: LognormalParams) -> complex:
    """Mellin transform of phi: Gamma(s) e^{-mu s + sigma^2 s^2 / 2}, Re s > 0."""
    s = complex(s)
    if not s.real > 0:
        raise ValidationFailedError('mellin_closed_form', f'Re s must be > 0, got {s}')
    exponent = log_gamma_complex(s) - params.mu * s + params.sigma**2 * s * s / 2
    if exponent.real > 709:
        raise NonFiniteError('mellin_closed_form', f'overflow at s = {s}')
    return cmath.exp(exponent)


def characteristic_function(
    t: float,
    params: LognormalParams,
    contour: Optional[ContourSpec] = None,
    config: Optional[Config] = None,
) -> complex:
    """E[e^{itX}] = phi(-it), ln(-it) = ln|t| - sgn(t) i pi / 2."""
    if t == 0 or not math.isfinite(t):
        raise ValidationFailedError('characteristic_function', f't must be finite and != 0, got {t}')
    log_z = complex(math.log(abs(t)), -math.copysign(math.pi / 2, t))
    return mellin_barnes_log_transform(log_z, params, contour, config)


def leipnik_formula(
    t: float, sigma: float, k: float, config: Optional[Config] = None
) -> complex:
    """
    (1 / 2 pi) int sin(pi s) Gamma(s) e^{-(ln t + i pi / 2) s + sigma^2 s^2 / 2} ds on Re s = k.

    sin(pi s) Gamma(s) = pi / Gamma(1 - s) is entire, so any k is allowed. The value
    equals [phi(t e^{-i pi / 2}) - phi(t e^{3 i pi / 2})] / 2 and is not the
    characteristic function: it tends to 0 as t -> 0.
    """
    config = config or default_config()
    if not t > 0:
        raise ValidationFailedError('leipnik_formula', f't must be > 0, got {t}')
    if not sigma > 0:
        raise ValidationFailedError('leipnik_formula', f'sigma must be > 0, got {sigma}')
    log_z = complex(math.log(t), math.pi / 2)
    contour = ContourSpec.for_log(log_z, sigma, k=k, config=config, extra_growth=math.pi)
    half_s2 = sigma**2 / 2
    log_pi = math.log(math.pi)

    def log_f(s: np.ndarray) -> np.ndarray:
        one_minus = 1 - s
        # zeros of 1 / Gamma(1 - s) at s = 1, 2, ...
        at_zero = (one_minus.imag == 0) & (one_minus.real <= 0) & (one_minus.real == np.round(one_minus.real))
        safe = np.where(at_zero, 0.5, one_minus)
        values = log_pi - special.loggamma(safe) - log_z * s + half_s2 * s * s
        return np.where(at_zero, -np.inf, values)

    # the integral carries 1 / 2 pi, not 1 / 2 pi i
    return 1j * vertical_trapezoid(log_f, contour, config, source='leipnik_formula')


def decay_bound(k: float, params: LognormalParams) -> float:
    """
    M_k with |phi(z)| <= M_k |z|^{-k} on the closed cut plane:
    Gamma(k) e^{-mu k + sigma^2 k^2 / 2} (1 / 2 pi) int e^{pi |t| - sigma^2 t^2 / 2} dt.
    """
    if not k > 0:
        raise ValidationFailedError('decay_bound', f'k must be > 0, got {k}')
    sigma = params.sigma
    log_line = (
        math.log(2)
        + math.pi**2 / (2 * sigma**2)
        + 0.5 * math.log(2 * math.pi)
        - math.log(sigma)
        + math.log(special.ndtr(math.pi / sigma))
    )
    exponent = (
        math.log(gamma_complex(k).real)
        - params.mu * k
        + sigma**2 * k**2 / 2
        - math.log(2 * math.pi)
        + log_line
    )
    if exponent > 709:
        raise NonFiniteError('decay_bound', f'bound overflows for k = {k}, {params}')
    return math.exp(exponent)


class MellinBarnesEvaluator(BaseEvaluator):
    with open(Path(__file__).parent / 'config.json') as f:
        EVALUATOR_NAME = ujson.load(f)['name']

    def evaluate(
        self, point: CutPlanePoint, params: LognormalParams, k: Optional[float] = None, **options
    ) -> ApproxResult:
        try:
            if options:
                raise ValidationFailedError(self.EVALUATOR_NAME, f'unknown options {sorted(options)}')
            contour = ContourSpec.for_point(point, params, k=k, config=self.config)
            value = mellin_barnes_transform(point, params, contour, self.config)
            return ApproxResult(value=value, method=self.EVALUATOR_NAME)
        except (BaseLaplaceError, OverflowError, TypeError) as e:
            e = self.handle_exception(e, z=str(point))
            raise e
