"""
Convergent small-z series

    phi(z) = sum_n (-z)^n / n! e^{mu n + sigma^2 n^2 / 2} erfc((mu + ln(z / alpha) + sigma^2 n) / (sqrt(2) sigma)) / 2 + R(z),

obtained by splitting Gamma(s) into the incomplete gammas at alpha >= 1, with
|R(z)| <= e^{pi^2 / (2 sigma^2) - alpha} / (sqrt(2 pi) sigma).
"""
import cmath
import math
import sys
from pathlib import Path
from typing import Optional

import ujson

from lognormal_laplace.config import Config, default_config
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.models.approx import ApproxResult, SmallZConfig
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.special.functions import log_erfcx
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    NonConvergence,
    TermOverflow,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)

MAX_EXPONENT = 709.0
_SQRT_2PI = math.sqrt(2 * math.pi)
ROUNDING_UNITS = 8


def pole_series_terms(
    point: CutPlanePoint, params: LognormalParams, alpha: float, n_terms: int
) -> list[complex]:
    """
    Summands n = 0 .. n_terms - 1 of the series, each formed as

        (-1)^n exp(n ln alpha - ln n! - (L - ln alpha)^2 / (2 sigma^2)) erfcx(w_n) / 2,
        L = mu + ln z,  w_n = (L - ln alpha + sigma^2 n) / (sqrt(2) sigma),

    which is the product e^{mu n + sigma^2 n^2 / 2} z^n erfc(w_n) with the Gaussian
    factors cancelled before exponentiation.
    """
    if not alpha >= 1:
        raise ValidationFailedError('pole_series_terms', f'alpha must be >= 1, got {alpha}')
    sigma = params.sigma
    shifted = params.mu + point.log() - math.log(alpha)
    gauss = -shifted * shifted / (2 * sigma * sigma) - math.log(2)
    scale = math.sqrt(2) * sigma
    log_alpha = math.log(alpha)

    terms = []
    for n in range(n_terms):
        w = (shifted + sigma * sigma * n) / scale
        exponent = n * log_alpha - math.lgamma(n + 1) + gauss + log_erfcx(w)
        if exponent.real > MAX_EXPONENT:
            raise TermOverflow(
                'pole_series_terms',
                f'term {n} at z = {point} has log-magnitude {exponent.real:.1f}',
                n=n,
            )
        term = cmath.exp(exponent)
        terms.append(-term if n % 2 else term)
    return terms


def _complex_fsum(values: list[complex]) -> complex:
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def small_z_error_bound(alpha: float, sigma: float) -> float:
    """Uniform bound on |R(z)| over the cut plane."""
    if not alpha >= 1:
        raise ValidationFailedError('small_z_error_bound', f'alpha must be >= 1, got {alpha}')
    if not sigma > 0:
        raise ValidationFailedError('small_z_error_bound', f'sigma must be > 0, got {sigma}')
    return math.exp(math.pi**2 / (2 * sigma**2) - alpha) / (_SQRT_2PI * sigma)


def point_error_bound(
    point: CutPlanePoint, params: LognormalParams, alpha: float, k: float = 0.0
) -> float:
    """
    |R(z)| <= e^{Arg(z)^2 / (2 sigma^2) + sigma^2 k^2 / 2 - alpha - k (mu + ln|z|)} / (sqrt(2 pi) sigma)
    for any abscissa k <= 1. k = 0 and Arg = pi give small_z_error_bound.
    """
    if k > 1:
        raise ValidationFailedError('point_error_bound', f'k must be <= 1, got {k}')
    sigma = params.sigma
    exponent = (
        point.arg**2 / (2 * sigma**2)
        + sigma**2 * k**2 / 2
        - alpha
        - k * (params.mu + math.log(point.modulus))
    )
    if exponent > MAX_EXPONENT:
        return math.inf
    return math.exp(exponent) / (_SQRT_2PI * sigma)


def truncation_tail_bound(
    point: CutPlanePoint,
    alpha: float,
    sigma: float,
    n_terms: int,
    k: float = 0.0,
    mu: float = 0.0,
) -> float:
    """
    Majorant of the dropped summands n >= N = n_terms. Moving the integration line of
    summand n to Re s = k > -N gives

        |term_n| <= alpha^(n + k) / (n! (n + k)) e^{-k (mu + ln|z|) + sigma^2 k^2 / 2 + Arg(z)^2 / (2 sigma^2)} / (sqrt(2 pi) sigma)

    and the ratio of consecutive majorants stays below alpha / (N + 1).
    Infinite while N + 1 <= alpha.
    """
    N = n_terms
    if N < 1 or N + 1 <= alpha:
        return math.inf
    if not N + k > 0:
        raise ValidationFailedError('truncation_tail_bound', f'k must be > -{N}, got {k}')
    exponent = (
        N * math.log(alpha)
        - math.lgamma(N + 1)
        - math.log(N + k)
        - math.log1p(-alpha / (N + 1))
        + k * (math.log(alpha) - mu - math.log(point.modulus))
        + sigma**2 * k**2 / 2
        + point.arg**2 / (2 * sigma**2)
    )
    if exponent > MAX_EXPONENT:
        return math.inf
    return math.exp(exponent) / (_SQRT_2PI * sigma)


def small_z_series(
    point: CutPlanePoint, params: LognormalParams, cfg: Optional[SmallZConfig] = None
) -> ApproxResult:
    cfg = cfg or SmallZConfig()
    terms = pole_series_terms(point, params, cfg.alpha, cfg.n_terms)
    value = _complex_fsum(terms)
    bound = point_error_bound(point, params, cfg.alpha, cfg.k_bound) + truncation_tail_bound(
        point, cfg.alpha, params.sigma, cfg.n_terms
    )
    logger.debug(
        'small-z series at z = %(z)s with alpha = %(alpha)s, %(n_terms)s terms, bound %(bound).3g',
        {LogArgs.z: str(point), LogArgs.alpha: cfg.alpha, LogArgs.n_terms: cfg.n_terms, 'bound': bound},
    )
    return ApproxResult(value=value, method='small_z_series', error_bound=bound)


def sharp_error_bound(
    point: CutPlanePoint, params: LognormalParams, alpha: float, n_terms: int
) -> float:
    """
    Remainder plus tail bound with each abscissa at the minimum of its exponent,
    k = (mu + ln|z|) / sigma^2 for the remainder (at most 1) and
    k = -(ln alpha - mu - ln|z|) / sigma^2 for the tail (at least -N / 2).
    Small near the origin even on the cut, where the uniform bound is useless.
    """
    log_r = params.mu + math.log(point.modulus)
    sigma2 = params.sigma**2
    k_remainder = min(1.0, log_r / sigma2)
    k_tail = max(-(math.log(alpha) - log_r) / sigma2, -n_terms / 2)
    return point_error_bound(point, params, alpha, k_remainder) + truncation_tail_bound(
        point, alpha, params.sigma, n_terms, k=k_tail, mu=params.mu
    )


def certified_series(
    point: CutPlanePoint, params: LognormalParams, cfg: Optional[SmallZConfig] = None
) -> ApproxResult:
    """
    The series with error_bound = sharp_error_bound plus an estimate of the rounding of
    the sum, which grows with the size of the Gaussian exponent the terms are formed from.
    """
    cfg = cfg or SmallZConfig()
    bound = sharp_error_bound(point, params, cfg.alpha, cfg.n_terms)
    terms = pole_series_terms(point, params, cfg.alpha, cfg.n_terms)
    shifted = params.mu + point.log() - math.log(cfg.alpha)
    scale = 1 + abs(shifted) ** 2 / params.sigma**2
    rounding = ROUNDING_UNITS * sys.float_info.epsilon * scale * math.fsum(abs(t) for t in terms)
    return ApproxResult(value=_complex_fsum(terms), method='small_z_series', error_bound=bound + rounding)


def divergence_witness(z: complex, params: LognormalParams, n_max: int) -> list[float]:
    """
    |partial sums| of sum_n (-z)^n / n! e^{mu n + sigma^2 n^2 / 2}, n = 0 .. n_max.
    Raises TermOverflow carrying the partial sums computed so far.
    """
    z = complex(z)
    if z == 0:
        return [1.0] * (n_max + 1)
    log_modulus = math.log(abs(z))
    phase = math.pi + cmath.phase(z)
    sigma2 = params.sigma**2
    total = 0j
    sums = []
    for n in range(n_max + 1):
        log_term = n * log_modulus + params.mu * n + sigma2 * n * n / 2 - math.lgamma(n + 1)
        if log_term > MAX_EXPONENT:
            raise TermOverflow(
                'divergence_witness',
                f'term {n} has log-magnitude {log_term:.1f}',
                n=n,
                partial_sums=sums,
            )
        total += cmath.rect(math.exp(log_term), n * phase)
        sums.append(abs(total))
    return sums


def divergence_onset(
    z: complex, params: LognormalParams, n_limit: Optional[int] = None
) -> int:
    """
    Smallest n0 with |term_{n+1} / term_n| = |z| e^{mu + sigma^2 (n + 1/2)} / (n + 1) > 1 for all n >= n0.
    The log-ratio is increasing once n + 1 > 1 / sigma^2.
    """
    z = complex(z)
    if z == 0:
        raise ValidationFailedError('divergence_onset', 'z must be != 0')
    n_limit = n_limit or default_config().SERIES_MAX_TERMS * 100
    sigma2 = params.sigma**2
    base = math.log(abs(z)) + params.mu

    def log_ratio(n: int) -> float:
        return base + sigma2 * (n + 0.5) - math.log(n + 1)

    n = max(0, math.ceil(1 / sigma2 - 1))
    while log_ratio(n) <= 0:
        n += 1
        if n > n_limit:
            raise NonConvergence('divergence_onset', f'no onset below n = {n_limit}', z=str(z))
    while n > 0 and log_ratio(n - 1) > 0:
        n -= 1
    return n


class SmallZSeriesEvaluator(BaseEvaluator):
    with open(Path(__file__).parent / 'config.json') as f:
        EVALUATOR_NAME = ujson.load(f)['name']

    def __init__(self, *, config: Config, **kwargs):
        super().__init__(config=config, **kwargs)
        self.defaults = SmallZConfig(
            alpha=config.SERIES_DEFAULT_ALPHA, n_terms=config.SERIES_DEFAULT_TERMS
        )

    def evaluate(
        self,
        point: CutPlanePoint,
        params: LognormalParams,
        alpha: Optional[float] = None,
        n_terms: Optional[int] = None,
        k_bound: Optional[float] = None,
        **options,
    ) -> ApproxResult:
        try:
            if options:
                raise ValidationFailedError(self.EVALUATOR_NAME, f'unknown options {sorted(options)}')
            overrides = {
                key: value
                for key, value in (('alpha', alpha), ('n_terms', n_terms), ('k_bound', k_bound))
                if value is not None
            }
            if overrides.get('n_terms', 0) > self.config.SERIES_MAX_TERMS:
                raise ValidationFailedError(
                    self.EVALUATOR_NAME, f'n_terms above SERIES_MAX_TERMS = {self.config.SERIES_MAX_TERMS}'
                )
            cfg = SmallZConfig(**{**self.defaults.dict(), **overrides})
            return small_z_series(point, params, cfg)
        except (BaseLaplaceError, OverflowError, TypeError) as e:
            e = self.handle_exception(e, z=str(point))
            raise e
