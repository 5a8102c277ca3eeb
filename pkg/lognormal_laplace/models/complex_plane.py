import cmath
import math
from enum import Enum
from typing import TYPE_CHECKING, Optional

from pydantic import BaseModel, Field, root_validator

from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import (
    BranchCutError,
    ContourError,
    ValidationFailedError,
)

if TYPE_CHECKING:
    from lognormal_laplace.config import Config


class Boundary(str, Enum):
    interior = 'interior'
    upper_limit = 'upper_limit'  # z = -t + i0


class CutPlanePoint(BaseModel):
    """
    A point of C \\ (-inf, 0], or a limit point -t + i0 on the upper edge of the cut.
    The logarithm is principal with Arg in (-pi, pi]; upper-limit points have Arg = pi exactly.
    """

    re: float
    im: float = 0.0
    boundary: Boundary = Boundary.interior

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def _off_the_cut(cls, values):
        re, im, boundary = values['re'], values['im'], values['boundary']
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValidationFailedError('CutPlanePoint', f'non-finite z = {complex(re, im)}')
        if boundary is Boundary.upper_limit:
            if im != 0 or re >= 0:
                raise BranchCutError(
                    'CutPlanePoint',
                    f'upper-limit points are -t + i0 with t > 0, got {complex(re, im)}',
                )
        elif im == 0 and re <= 0:
            raise BranchCutError('CutPlanePoint', f'z = {complex(re, im)}')
        return values

    @classmethod
    def from_complex(cls, z: complex, upper_limit: bool = False) -> 'CutPlanePoint':
        z = complex(z)
        boundary = Boundary.upper_limit if upper_limit else Boundary.interior
        return cls(re=z.real, im=z.imag, boundary=boundary)

    @classmethod
    def on_cut(cls, t: float) -> 'CutPlanePoint':
        """The limit -t + i0 from the upper half-plane."""
        return cls(re=-t, im=0.0, boundary=Boundary.upper_limit)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def is_boundary(self) -> bool:
        return self.boundary is Boundary.upper_limit

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def arg(self) -> float:
        if self.is_boundary:
            return math.pi
        return cmath.phase(self.value)

    def log(self) -> complex:
        if self.is_boundary:
            return complex(math.log(-self.re), math.pi)
        return cmath.log(self.value)

    def conjugate(self) -> 'CutPlanePoint':
        if self.is_boundary:
            raise ValidationFailedError(
                'CutPlanePoint.conjugate', 'the lower limit -t - i0 is not a cut-plane point'
            )
        return CutPlanePoint(re=self.re, im=-self.im)

    def __str__(self):
        if self.is_boundary:
            return f'{self.re:g}+i0'
        return f'{self.value}'


class ContourSpec(BaseModel):
    """Discretized vertical line s = k + it, |t| <= T, trapezoid step h."""

    k: float
    T: float = Field(..., gt=0)
    h: float = Field(..., gt=0)

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def _resolved(cls, values):
        if values['h'] > values['T'] / 50:
            raise ContourError(
                'ContourSpec', f'step {values["h"]} coarser than T/50 = {values["T"] / 50}'
            )
        return values

    @property
    def nodes(self) -> int:
        return 2 * math.ceil(self.T / self.h) + 1

    @classmethod
    def for_log(
        cls,
        log_z: complex,
        sigma: float,
        k: Optional[float] = None,
        config: Optional['Config'] = None,
        extra_growth: float = 0.0,
    ) -> 'ContourSpec':
        """
        Chooses T so that the majorant e^{|Im ln z| t - sigma^2 t^2 / 2} has dropped
        to MB_MAJORANT_RATIO of its peak at |t| = T.
        Args:
            log_z:complex: logarithm of the transform argument, any sheet
            sigma:float: log-scale dispersion
            k:Optional[float]: abscissa, MB_DEFAULT_K when omitted
            extra_growth:float: added exponential rate of other integrand factors
        """
        if config is None:
            from lognormal_laplace.config import default_config

            config = default_config()
        k = config.MB_DEFAULT_K if k is None else k
        rate = abs(log_z.imag) + extra_growth
        drop = math.sqrt(2 * math.log(1 / config.MB_MAJORANT_RATIO))
        T = (rate / sigma + drop) / sigma
        h = min(0.5 * sigma, config.MB_MAX_STEP)
        if k > 0:
            # the gamma pole at s = 0 sits at distance k from the line
            h = min(h, k / 6)
        h = min(h, T / 50)
        return cls(k=k, T=T, h=h)

    @classmethod
    def for_point(
        cls,
        point: CutPlanePoint,
        params: LognormalParams,
        k: Optional[float] = None,
        config: Optional['Config'] = None,
    ) -> 'ContourSpec':
        return cls.for_log(point.log(), params.sigma, k=k, config=config)
