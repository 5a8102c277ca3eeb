import math

from pydantic import BaseModel, Field, validator

from lognormal_laplace.utils.errors import ValidationFailedError


class LognormalParams(BaseModel):
    mu: float = Field(0.0, description='log-scale location')
    sigma: float = Field(..., description='log-scale dispersion')

    class Config:
        frozen = True

    @validator('mu')
    def _finite_mu(cls, v):
        if not math.isfinite(v):
            raise ValidationFailedError('LognormalParams', f'mu must be finite, got {v}')
        return v

    @validator('sigma')
    def _positive_sigma(cls, v):
        if not (math.isfinite(v) and v > 0):
            raise ValidationFailedError('LognormalParams', f'sigma must be > 0, got {v}')
        return v

    @property
    def mean(self) -> float:
        return math.exp(self.mu + self.sigma**2 / 2)

    def __str__(self):
        return f'lnN({self.mu:g}, {self.sigma:g}^2)'


class ComponentList(BaseModel):
    """Independent lognormal summands X_1 + ... + X_n."""

    components: tuple[LognormalParams, ...]

    class Config:
        frozen = True

    @validator('components')
    def _not_empty(cls, v):
        if not v:
            raise ValidationFailedError('ComponentList', 'at least one component is required')
        return v

    def __len__(self):
        return len(self.components)

    def __getitem__(self, j: int) -> LognormalParams:
        return self.components[j]

    @property
    def mean(self) -> float:
        return sum(p.mean for p in self.components)

    @classmethod
    def of(cls, *components: LognormalParams) -> 'ComponentList':
        return cls(components=components)
