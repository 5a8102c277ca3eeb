import math
import warnings
from pathlib import Path
from typing import Callable, Optional

import numpy as np
import ujson
from scipy.integrate import IntegrationWarning, quad
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from lognormal_laplace.config import Config, default_config
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.models.approx import ApproxResult
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    QuadratureFailure,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)

_NORMAL_SCALE = 1 / math.sqrt(2 * math.pi)
_BREAKS = (-8.0, 0.0, 8.0)


def adaptive_quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    config: Optional[Config] = None,
    source: str = 'adaptive_quad',
    points: Optional[tuple[float, ...]] = None,
) -> float:
    """
    scipy quad with IntegrationWarning promoted to an error, retried with the
    subdivision limits of DIRECT_LIMITS in turn.
    """
    config = config or default_config()
    limits = list(config.DIRECT_LIMITS)
    try:
        for attempt in Retrying(
            retry=retry_if_exception_type(IntegrationWarning),
            stop=stop_after_attempt(len(limits)),
            reraise=True,
        ):
            with attempt:
                limit = limits[attempt.retry_state.attempt_number - 1]
                with warnings.catch_warnings():
                    warnings.simplefilter('error', IntegrationWarning)
                    value, _ = quad(
                        f,
                        lo,
                        hi,
                        epsabs=config.DIRECT_ABS_TOL,
                        epsrel=config.DIRECT_REL_TOL,
                        limit=limit,
                        points=points,
                    )
    except IntegrationWarning as e:
        raise QuadratureFailure(source, str(e).splitlines()[0], limits=limits) from e
    return value


def direct_transform(
    z: complex, params: LognormalParams, config: Optional[Config] = None
) -> complex:
    """
    E[exp(-zX)] for Re z >= 0 as int exp(-z e^{mu + sigma v}) n(v) dv over the
    standard normal density n, truncated at DIRECT_HALF_WIDTH standard deviations.
    """
    config = config or default_config()
    z = complex(z)
    if z.real < 0:
        raise ValidationFailedError('direct_transform', f'Re z must be >= 0, got {z}')
    if z == 0:
        return 1 + 0j

    mu, sigma = params.mu, params.sigma

    def integrand(v: float) -> complex:
        with np.errstate(over='ignore', under='ignore'):
            return np.exp(-z * np.exp(mu + sigma * v) - v * v / 2)

    half_width = config.DIRECT_HALF_WIDTH
    re = adaptive_quad(
        lambda v: integrand(v).real, -half_width, half_width, config, 'direct_transform', _BREAKS
    )
    im = 0.0
    if z.imag != 0:
        im = adaptive_quad(
            lambda v: integrand(v).imag, -half_width, half_width, config, 'direct_transform', _BREAKS
        )
    logger.debug(
        'direct quadrature at z = %(z)s, mu = %(mu)s, sigma = %(sigma)s',
        {LogArgs.z: z, LogArgs.mu: mu, LogArgs.sigma: sigma},
    )
    return _NORMAL_SCALE * complex(re, im)


class DirectEvaluator(BaseEvaluator):
    with open(Path(__file__).parent / 'config.json') as f:
        EVALUATOR_NAME = ujson.load(f)['name']

    def evaluate(
        self, point: CutPlanePoint, params: LognormalParams, **options
    ) -> ApproxResult:
        try:
            if options:
                raise ValidationFailedError(self.EVALUATOR_NAME, f'unknown options {sorted(options)}')
            if point.is_boundary:
                raise ValidationFailedError(
                    self.EVALUATOR_NAME, f'Re z must be >= 0, got boundary point {point}'
                )
            value = direct_transform(point.value, params, self.config)
            return ApproxResult(value=value, method=self.EVALUATOR_NAME)
        except (BaseLaplaceError, OverflowError, TypeError) as e:
            e = self.handle_exception(e, z=str(point))
            raise e
