"""
Taylor coefficients b_j of Gamma(s) - 1/s about s = 0.

Gamma(1 + s) = exp(-gamma s + sum_{k>=2} (-1)^k zeta(k) s^k / k) = sum_n c_n s^n and b_j = c_{j+1}.
The exponential is taken as a power series in mpmath and rounded to doubles.
"""
import math
from functools import lru_cache

import mpmath
from pydantic import BaseModel, validator

from lognormal_laplace.utils.errors import DegreeError, ValidationFailedError
from lognormal_laplace.utils.logger import get_logger

logger = get_logger(__name__)

TAYLOR_MAX_DEGREE = 40
TAYLOR_MIN_DEGREE = 20
EULER_GAMMA = 0.5772156649015329
_WORKING_DPS = 40


class GammaTaylorTable(BaseModel):
    coeffs: tuple[float, ...]

    class Config:
        frozen = True

    @validator('coeffs')
    def _starts_with_euler_gamma(cls, v):
        if len(v) < TAYLOR_MIN_DEGREE + 1:
            raise ValidationFailedError(
                'GammaTaylorTable', f'need at least {TAYLOR_MIN_DEGREE + 1} coefficients, got {len(v)}'
            )
        if abs(v[0] + EULER_GAMMA) > 1e-14:
            raise ValidationFailedError('GammaTaylorTable', f'b_0 = {v[0]} is not -EulerGamma')
        return v

    @property
    def j_max(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> float:
        return self.coeffs[j]

    def evaluate(self, s: complex) -> complex:
        """Partial sum of sum_j b_j s^j, the Horner form of Gamma(s) - 1/s for |s| < 1."""
        if abs(s) >= 1:
            raise ValidationFailedError('GammaTaylorTable.evaluate', f'|s| = {abs(s)} outside the unit disc')
        total = 0j
        for b in reversed(self.coeffs):
            total = total * s + b
        return total


def _log_gamma_series(order: int) -> list:
    """Coefficients l_k of log Gamma(1 + s), k = 0 .. order."""
    coefficients = [mpmath.mpf(0), -mpmath.euler]
    for k in range(2, order + 1):
        coefficients.append((-1) ** k * mpmath.zeta(k) / k)
    return coefficients


def _exp_series(log_coefficients: list) -> list:
    """Power series of exp(sum l_k s^k) with l_0 = 0: e_n = (1/n) sum_{k=1}^{n} k l_k e_{n-k}."""
    result = [mpmath.mpf(1)]
    for n in range(1, len(log_coefficients)):
        acc = mpmath.mpf(0)
        for k in range(1, n + 1):
            acc += k * log_coefficients[k] * result[n - k]
        result.append(acc / n)
    return result


@lru_cache(maxsize=None)
def gamma_taylor_coeffs(j_max: int = TAYLOR_MIN_DEGREE) -> GammaTaylorTable:
    if j_max > TAYLOR_MAX_DEGREE:
        raise DegreeError('gamma_taylor_coeffs', f'j_max = {j_max} > {TAYLOR_MAX_DEGREE}')
    if j_max < 0:
        raise ValidationFailedError('gamma_taylor_coeffs', f'j_max must be >= 0, got {j_max}')
    degree = max(j_max, TAYLOR_MIN_DEGREE)
    with mpmath.workdps(_WORKING_DPS):
        c = _exp_series(_log_gamma_series(degree + 1))
        coeffs = tuple(float(c[j + 1]) for j in range(degree + 1))
    logger.debug('gamma taylor table built up to j = %s', degree)
    return GammaTaylorTable(coeffs=coeffs)


def a_coefficients(m_max: int, n_poles: int) -> list[float]:
    """
    a_m = b_m + (-1)^{m+1} sum_{j=1}^{N} (-1)^j / (j! j^{m+1}), m = 0 .. m_max.
    The first N poles of Gamma taken out of its Taylor expansion.
    """
    if m_max > TAYLOR_MAX_DEGREE:
        raise DegreeError('a_coefficients', f'm_max = {m_max} > {TAYLOR_MAX_DEGREE}')
    if m_max < 0 or n_poles < 0:
        raise ValidationFailedError(
            'a_coefficients', f'm_max and n_poles must be >= 0, got {m_max}, {n_poles}'
        )
    table = gamma_taylor_coeffs(max(m_max, TAYLOR_MIN_DEGREE))
    result = []
    for m in range(m_max + 1):
        poles = math.fsum(
            (-1) ** j / (math.factorial(j) * j ** (m + 1)) for j in range(1, n_poles + 1)
        )
        result.append(table[m] + (-1) ** (m + 1) * poles)
    return result
