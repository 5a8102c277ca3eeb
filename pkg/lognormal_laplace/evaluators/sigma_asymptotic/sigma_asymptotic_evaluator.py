"""
Large-sigma expansion: the first N + 1 poles of Gamma are integrated exactly,
the remainder Gamma(s) - sum_{n<=N} (-1)^n / (n! (s + n)) is expanded in powers
of s and each power integrated against the Gaussian, giving Hermite terms.
The omitted part is O(sigma^{-M-2}); no rigorous bound is attached.
"""
import cmath
import math
from pathlib import Path
from typing import NamedTuple, Optional

import ujson

from lognormal_laplace.config import Config
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.evaluators.small_z_series.small_z_series_evaluator import (
    pole_series_terms,
)
from lognormal_laplace.models.approx import ApproxResult, SigmaAsymConfig
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.special.functions import hermite_prob
from lognormal_laplace.special.taylor import a_coefficients
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    TermOverflow,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)


class SigmaAsymTerms(NamedTuple):
    poles: list[complex]
    hermite: list[complex]


def sigma_asymptotic_terms(
    point: CutPlanePoint, params: LognormalParams, cfg: SigmaAsymConfig
) -> SigmaAsymTerms:
    sigma = params.sigma
    L = params.mu + point.log()
    poles = pole_series_terms(point, params, alpha=1.0, n_terms=cfg.n_poles + 1)

    log_gauss = -L * L / (2 * sigma * sigma) - 0.5 * math.log(2 * math.pi) - math.log(sigma)
    if log_gauss.real > 709:
        raise TermOverflow(
            'sigma_asymptotic', f'Gaussian factor overflows at z = {point}, sigma = {sigma}'
        )
    gauss = cmath.exp(log_gauss)
    x = -L / sigma
    hermite = []
    for m, a_m in enumerate(a_coefficients(cfg.m_terms, cfg.n_poles)):
        hermite.append((-1) ** m * a_m * hermite_prob(m, x) * gauss / sigma**m)
    return SigmaAsymTerms(poles=poles, hermite=hermite)


def sigma_asymptotic(
    point: CutPlanePoint, params: LognormalParams, cfg: Optional[SigmaAsymConfig] = None
) -> ApproxResult:
    cfg = cfg or SigmaAsymConfig()
    terms = sigma_asymptotic_terms(point, params, cfg)
    parts = terms.poles + terms.hermite
    value = complex(math.fsum(v.real for v in parts), math.fsum(v.imag for v in parts))
    logger.debug(
        'sigma asymptotic at z = %(z)s, sigma = %(sigma)s, N = %(n_poles)s, M = %(n_terms)s',
        {
            LogArgs.z: str(point),
            LogArgs.sigma: params.sigma,
            'n_poles': cfg.n_poles,
            LogArgs.n_terms: cfg.m_terms,
        },
    )
    return ApproxResult(value=value, method='sigma_asymptotic', error_bound=None)


class SigmaAsymptoticEvaluator(BaseEvaluator):
    with open(Path(__file__).parent / 'config.json') as f:
        EVALUATOR_NAME = ujson.load(f)['name']

    def __init__(self, *, config: Config, **kwargs):
        super().__init__(config=config, **kwargs)
        self.defaults = SigmaAsymConfig(
            n_poles=config.ASYM_DEFAULT_POLES, m_terms=config.ASYM_DEFAULT_TERMS
        )

    def evaluate(
        self,
        point: CutPlanePoint,
        params: LognormalParams,
        n_poles: Optional[int] = None,
        m_terms: Optional[int] = None,
        **options,
    ) -> ApproxResult:
        try:
            if options:
                raise ValidationFailedError(self.EVALUATOR_NAME, f'unknown options {sorted(options)}')
            overrides = {
                key: value
                for key, value in (('n_poles', n_poles), ('m_terms', m_terms))
                if value is not None
            }
            cfg = SigmaAsymConfig(**{**self.defaults.dict(), **overrides})
            return sigma_asymptotic(point, params, cfg)
        except (BaseLaplaceError, OverflowError, TypeError) as e:
            e = self.handle_exception(e, z=str(point))
            raise e
