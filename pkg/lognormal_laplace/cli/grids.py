"""
Grid syntax of the command line: a comma list `a,b,c` or a range `start:stop:step`
with stop included. Points of the z grid may be complex, written `a+bj`.
"""
import math

import numpy as np

from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import ComponentList, LognormalParams
from lognormal_laplace.utils.errors import ValidationFailedError

RANGE_DECIMALS = 12


def parse_real(text: str, source: str = 'grid') -> float:
    try:
        value = float(text)
    except ValueError:
        raise ValidationFailedError(source, f'not a number: {text!r}') from None
    if not math.isfinite(value):
        raise ValidationFailedError(source, f'not finite: {text!r}')
    return value


def parse_complex(text: str, source: str = 'grid') -> complex:
    try:
        value = complex(text.replace(' ', ''))
    except ValueError:
        raise ValidationFailedError(source, f'not a complex number: {text!r}') from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValidationFailedError(source, f'not finite: {text!r}')
    return value


def real_range(start: float, stop: float, step: float, source: str = 'grid') -> list[float]:
    if not step > 0:
        raise ValidationFailedError(source, f'range step must be > 0, got {step}')
    if stop < start:
        raise ValidationFailedError(source, f'range stop {stop} below start {start}')
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = np.round(start + step * np.arange(count), RANGE_DECIMALS)
    return [float(v) for v in values]


def parse_real_grid(text: str, source: str = 'grid') -> list[float]:
    text = text.strip()
    if not text:
        raise ValidationFailedError(source, 'empty grid')
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise ValidationFailedError(source, f'range must be start:stop:step, got {text!r}')
        start, stop, step = (parse_real(p, source) for p in parts)
        return real_range(start, stop, step, source)
    return [parse_real(p, source) for p in text.split(',')]


def parse_point_grid(
    text: str, upper_limit: bool = False, source: str = 'grid'
) -> list[CutPlanePoint]:
    """
    z values of an eval run. With upper_limit, negative reals become the limits -t + i0;
    any other point must lie off the cut.
    """
    text = text.strip()
    if not text:
        raise ValidationFailedError(source, 'empty grid')
    if ':' in text:
        values = [complex(v) for v in parse_real_grid(text, source)]
    else:
        values = [parse_complex(p, source) for p in text.split(',')]
    return [_point(z, upper_limit) for z in values]


def _point(z: complex, upper_limit: bool) -> CutPlanePoint:
    if upper_limit and z.imag == 0 and z.real < 0:
        return CutPlanePoint.on_cut(-z.real)
    return CutPlanePoint.from_complex(z)


def parse_components(text: str, source: str = 'components') -> ComponentList:
    """`mu:sigma[,mu:sigma...]`"""
    components = []
    for item in (p.strip() for p in text.split(',')):
        if not item:
            continue
        parts = item.split(':')
        if len(parts) != 2:
            raise ValidationFailedError(source, f'component must be mu:sigma, got {item!r}')
        mu, sigma = (parse_real(p, source) for p in parts)
        components.append(LognormalParams(mu=mu, sigma=sigma))
    return ComponentList(components=tuple(components))
