import cmath
import math
from typing import Optional

from pydantic import BaseModel, Field, validator

from lognormal_laplace.utils.errors import (
    DegreeError,
    NonFiniteError,
    ValidationFailedError,
)

SIGMA_ASYM_MAX_ORDER = 30


class SmallZConfig(BaseModel):
    alpha: float = 10.0  # split point of the incomplete gammas, >= 1
    n_terms: int = 41  # summands n = 0 .. n_terms - 1
    k_bound: float = 0.0  # abscissa of the remainder bound, 0 gives the uniform bound

    class Config:
        frozen = True

    @validator('alpha')
    def _alpha_at_least_one(cls, v):
        if not v >= 1:
            raise ValidationFailedError('SmallZConfig', f'alpha must be >= 1, got {v}')
        return v

    @validator('n_terms')
    def _some_terms(cls, v):
        if v < 1:
            raise ValidationFailedError('SmallZConfig', f'n_terms must be >= 1, got {v}')
        return v

    @validator('k_bound')
    def _k_bound(cls, v):
        if v > 1:
            raise ValidationFailedError('SmallZConfig', f'k_bound must be <= 1, got {v}')
        return v


class SigmaAsymConfig(BaseModel):
    n_poles: int = 5  # N, poles of gamma removed explicitly
    m_terms: int = 10  # M, Hermite terms of the second sum

    class Config:
        frozen = True

    @validator('n_poles', 'm_terms')
    def _bounded_order(cls, v, field):
        if v < 0:
            raise ValidationFailedError('SigmaAsymConfig', f'{field.name} must be >= 0, got {v}')
        if v > SIGMA_ASYM_MAX_ORDER:
            raise DegreeError(
                'SigmaAsymConfig', f'{field.name} = {v} exceeds {SIGMA_ASYM_MAX_ORDER}'
            )
        return v


class ApproxResult(BaseModel):
    value: complex
    method: str
    error_bound: Optional[float] = Field(
        None, description='rigorous bound on |value - exact|, None when only an order estimate exists'
    )

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @validator('value', pre=True)
    def _finite_value(cls, v):
        v = complex(v)
        if not cmath.isfinite(v):
            raise NonFiniteError('ApproxResult', f'value {v}')
        return v

    @validator('error_bound')
    def _nonnegative_bound(cls, v):
        if v is not None and not v >= 0:
            raise NonFiniteError('ApproxResult', f'error bound {v}')
        return v

    @property
    def has_bound(self) -> bool:
        return self.error_bound is not None and math.isfinite(self.error_bound)
