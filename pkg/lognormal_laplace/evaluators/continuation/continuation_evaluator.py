"""
Continuation of the lognormal Laplace transform to the cut plane through

    phi(z) = (2 pi sigma^2)^{-1/2} exp(-L^2 / (2 sigma^2)) Phi(1, L; sigma),  L = mu + ln z,
    Phi(1, w; sigma) = int exp(-e^x - x^2 / (2 sigma^2) + a x / sigma^2) e^{itx} dx,

with w = a + ib and t = b / sigma^2. The x-integral is done by Filon quadrature.
"""
import cmath
import math
from pathlib import Path
from typing import Callable, NamedTuple, Optional

import numpy as np
import ujson
from scipy.optimize import brentq
from scipy.special import lambertw

from lognormal_laplace.config import Config, default_config
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.models.approx import ApproxResult
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.quadrature.filon import FilonMesh
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    MeshTooNarrow,
    NonFiniteError,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)

MAX_EXPONENT = 709.0
CANCELLATION_WARNING_DIGITS = 8


class PhiParts(NamedTuple):
    """Phi(1, w; sigma) = exp(log_scale) * integral"""

    log_scale: float
    integral: complex
    mass: float  # the same integral without the oscillating factor
    mesh_nodes: int


def _lambert_w_exp(log_x: float) -> float:
    """Principal W(e^{log_x}) without forming e^{log_x} when it overflows."""
    if log_x < MAX_EXPONENT:
        return float(lambertw(math.exp(log_x)).real)
    # y + ln y = log_x
    y = log_x - math.log(log_x)
    for _ in range(50):
        step = (y + math.log(y) - log_x) / (1 + 1 / y)
        y -= step
        if abs(step) < 1e-15 * y:
            break
    return y


def _exponent(a: float, sigma: float) -> Callable[[np.ndarray], np.ndarray]:
    s2 = sigma * sigma

    def h(x):
        with np.errstate(over='ignore'):
            return -np.exp(x) - x * x / (2 * s2) + a * x / s2

    return h


def _edge(f: Callable[[float], float], peak: float, step: float, direction: int) -> float:
    """Root of f on the side of the peak given by direction, f(peak) > 0."""
    far = peak + direction * step
    while f(far) > 0:
        step *= 2
        far = peak + direction * step
    lo, hi = sorted((peak, far))
    return brentq(f, lo, hi, xtol=1e-12)


def support(a: float, sigma: float, clip: float) -> tuple[float, float, float]:
    """
    Peak x* of the Phi integrand and the interval where it exceeds clip * peak.

    Returns:
        (x_lo, x_peak, x_hi)
    """
    s2 = sigma * sigma
    x_peak = a - _lambert_w_exp(a + math.log(s2))
    h = _exponent(a, sigma)
    h_peak = float(h(x_peak))
    level = math.log(clip)

    def f(x):
        return float(h(x)) - h_peak - level

    width = sigma * max(1.0, sigma)
    return _edge(f, x_peak, width, -1), x_peak, _edge(f, x_peak, width, 1)


def phi_big_parts(w: complex, sigma: float, config: Optional[Config] = None) -> PhiParts:
    config = config or default_config()
    if not sigma > 0:
        raise ValidationFailedError('phi_big', f'sigma must be > 0, got {sigma}')
    w = complex(w)
    a, t = w.real, w.imag / sigma**2
    x_lo, x_peak, x_hi = support(a, sigma, config.FILON_CLIP)
    width = x_hi - x_lo

    panels = max(config.FILON_NODES // 2, math.ceil(width * abs(t) / (2 * config.FILON_MAX_PHASE)))
    max_panels = (config.FILON_MAX_NODES - 1) // 2
    if panels > max_panels:
        logger.warning(
            'Filon mesh capped at %(nodes)s nodes, panel phase %(phase).3g above FILON_MAX_PHASE',
            {LogArgs.nodes: config.FILON_MAX_NODES, 'phase': width * abs(t) / (2 * max_panels)},
        )
        panels = max_panels

    h = _exponent(a, sigma)
    h_peak = float(h(x_peak))
    nodes = np.linspace(x_lo, x_hi, 2 * panels + 1)
    with np.errstate(under='ignore'):
        samples = np.exp(h(nodes) - h_peak)
    mesh = FilonMesh.from_samples(nodes, samples)

    integral = mesh.integrate(1j * t)
    mass = mesh.integrate(0).real

    s2 = sigma * sigma
    slopes = [abs(float(-math.exp(x) - x / s2 + a / s2)) for x in (x_lo, x_hi)]
    tail = float(samples[0]) / slopes[0] + float(samples[-1]) / slopes[1]
    if tail > config.FILON_TAIL_RATIO * mass:
        raise MeshTooNarrow(
            'phi_big',
            f'tail estimate {tail:.3g} against integral {mass:.3g} on [{x_lo:.4g}, {x_hi:.4g}]',
            nodes=len(nodes),
        )

    logger.debug(
        'Filon mesh on [%(lo).4g, %(hi).4g] with %(nodes)s nodes, t = %(t)s',
        {'lo': x_lo, 'hi': x_hi, LogArgs.nodes: len(nodes), LogArgs.t: t},
    )
    return PhiParts(log_scale=h_peak, integral=integral, mass=mass, mesh_nodes=len(nodes))


def phi_big(w: complex, sigma: float, config: Optional[Config] = None) -> complex:
    """Phi(1, w; sigma) by Filon quadrature."""
    parts = phi_big_parts(w, sigma, config)
    if parts.log_scale > MAX_EXPONENT:
        raise NonFiniteError('phi_big', f'Phi overflows at w = {w}, sigma = {sigma}')
    return math.exp(parts.log_scale) * parts.integral


def continued_transform(
    point: CutPlanePoint, params: LognormalParams, config: Optional[Config] = None
) -> complex:
    """phi(z; mu, sigma) anywhere on the cut plane, Arg z = pi exactly on upper-limit points."""
    config = config or default_config()
    sigma = params.sigma
    L = params.mu + point.log()
    parts = phi_big_parts(L, sigma, config)

    if parts.integral == 0:
        raise NonFiniteError(
            'continued_transform', f'oscillatory integral underflows at z = {point}, sigma = {sigma}'
        )
    lost = math.log10(parts.mass / abs(parts.integral))
    if lost >= config.CONTINUATION_MAX_LOST_DIGITS:
        raise NonFiniteError(
            'continued_transform',
            f'{lost:.1f} digits lost to cancellation at z = {point}, sigma = {sigma}',
            lost_digits=round(lost, 1),
        )
    if lost > CANCELLATION_WARNING_DIGITS:
        logger.warning(
            'continuation at z = %(z)s, sigma = %(sigma)s loses %(lost).1f digits to cancellation',
            {LogArgs.z: str(point), LogArgs.sigma: sigma, 'lost': lost},
        )

    exponent = (
        -L * L / (2 * sigma * sigma)
        - 0.5 * math.log(2 * math.pi * sigma * sigma)
        + parts.log_scale
        + cmath.log(parts.integral)
    )
    if exponent.real > MAX_EXPONENT:
        raise NonFiniteError('continued_transform', f'value overflows at z = {point}')
    return cmath.exp(exponent)


class ContinuationEvaluator(BaseEvaluator):
    with open(Path(__file__).parent / 'config.json') as f:
        EVALUATOR_NAME = ujson.load(f)['name']

    def evaluate(
        self, point: CutPlanePoint, params: LognormalParams, **options
    ) -> ApproxResult:
        try:
            if options:
                raise ValidationFailedError(self.EVALUATOR_NAME, f'unknown options {sorted(options)}')
            value = continued_transform(point, params, self.config)
            return ApproxResult(value=value, method=self.EVALUATOR_NAME)
        except (BaseLaplaceError, OverflowError, TypeError) as e:
            e = self.handle_exception(e, z=str(point))
            raise e
