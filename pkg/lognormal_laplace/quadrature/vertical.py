"""
Trapezoid rule on a vertical contour s = k + it, |t| <= T.
"""
import cmath
import math
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np

from lognormal_laplace.models.complex_plane import ContourSpec
from lognormal_laplace.utils.errors import NonFiniteError, TruncationError
from lognormal_laplace.utils.logger import LogArgs, get_logger

if TYPE_CHECKING:
    from lognormal_laplace.config import Config

logger = get_logger(__name__)

# largest exponent exp() accepts in double precision
MAX_EXPONENT = 709.0


def contour_nodes(contour: ContourSpec, config: Optional['Config'] = None) -> np.ndarray:
    if config is None:
        from lognormal_laplace.config import default_config

        config = default_config()
    if contour.nodes > config.MB_MAX_NODES:
        raise TruncationError(
            'contour_nodes',
            f'{contour.nodes} nodes needed for T = {contour.T:g}, h = {contour.h:g}',
            nodes=contour.nodes,
        )
    half = math.ceil(contour.T / contour.h)
    t = contour.h * np.arange(-half, half + 1, dtype=float)
    return contour.k + 1j * t


def vertical_trapezoid(
    log_integrand: Callable[[np.ndarray], np.ndarray],
    contour: ContourSpec,
    config: Optional['Config'] = None,
    source: str = 'vertical_trapezoid',
) -> complex:
    """
    (1 / 2 pi i) int F(s) ds along the contour, given log F on the nodes.
    Args:
        log_integrand: vectorized log F(s); -inf marks nodes where F vanishes
        contour:ContourSpec: abscissa, half-width and step
        source:str: operation named in raised errors

    Returns:
        h / (2 pi) * sum F(k + i t_j), summed after factoring out the largest exponent
    """
    s = contour_nodes(contour, config)
    log_values = np.asarray(log_integrand(s), dtype=complex)
    finite = np.isfinite(log_values.real)
    if np.any(np.isnan(log_values.real) | np.isposinf(log_values.real)) or np.any(
        np.isnan(log_values.imag[finite])
    ):
        raise NonFiniteError(source, 'NaN or infinity in the contour integrand')
    if not np.any(finite):
        return 0j
    peak = float(np.max(log_values.real[finite]))
    with np.errstate(under='ignore'):
        scaled = np.where(finite, np.exp(log_values - peak), 0)
    total = complex(np.sum(scaled)) * contour.h / (2 * math.pi)
    if total == 0:
        return 0j
    log_result = peak + math.log(abs(total))
    if log_result > MAX_EXPONENT:
        raise NonFiniteError(source, f'result overflows, log|value| = {log_result:.1f}')
    logger.debug(
        'trapezoid on %(nodes)s nodes, T = %(truncation)s, h = %(step)s, %(lost).1f digits lost',
        {
            LogArgs.nodes: len(s),
            LogArgs.truncation: contour.T,
            LogArgs.step: contour.h,
            'lost': max(0.0, (peak - log_result) / math.log(10)),
        },
    )
    return cmath.rect(math.exp(log_result), cmath.phase(total))
