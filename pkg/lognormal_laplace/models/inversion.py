import numpy as np
from pydantic import BaseModel, root_validator, validator
from scipy.integrate import trapezoid

from lognormal_laplace.utils.errors import MeshError, ValidationFailedError


def _frozen_array(v, dtype) -> np.ndarray:
    arr = np.array(v, dtype=dtype)
    arr.setflags(write=False)
    return arr


class BoundarySamples(BaseModel):
    """phi(-t + i0) of a product of components, sampled on the boundary mesh."""

    t_nodes: np.ndarray
    values: np.ndarray
    method_tag: str
    series_nodes: int = 0  # nodes taken from the certified small-z series

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('t_nodes', pre=True)
    def _real_nodes(cls, v):
        return _frozen_array(v, float)

    @validator('values', pre=True)
    def _complex_values(cls, v):
        return _frozen_array(v, complex)

    @root_validator(skip_on_failure=True)
    def _normalized(cls, values):
        t, phi = values['t_nodes'], values['values']
        if t.ndim != 1 or t.size < 3 or t.size % 2 == 0:
            raise MeshError('BoundarySamples', f'odd node count >= 3 required, got {t.size}')
        if phi.shape != t.shape:
            raise ValidationFailedError('BoundarySamples', 'values do not match t_nodes')
        if t[0] != 0 or np.any(np.diff(t) <= 0):
            raise MeshError('BoundarySamples', 'nodes must start at 0 and increase')
        if phi[0] != 1:
            raise ValidationFailedError('BoundarySamples', 'phi(0) must be exactly 1')
        if not np.all(np.isfinite(phi)):
            raise ValidationFailedError('BoundarySamples', 'non-finite boundary values')
        return values


class DensityCurve(BaseModel):
    x_nodes: np.ndarray
    f_values: np.ndarray
    mass_estimate: float

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator('x_nodes', 'f_values', pre=True)
    def _real_array(cls, v):
        return _frozen_array(v, float)

    @classmethod
    def from_values(cls, x_nodes, f_values) -> 'DensityCurve':
        x = np.asarray(x_nodes, dtype=float)
        f = np.asarray(f_values, dtype=float)
        return cls(x_nodes=x, f_values=f, mass_estimate=_anchored_trapezoid(x, f))

    @property
    def first_moment(self) -> float:
        return _anchored_trapezoid(self.x_nodes, self.x_nodes * self.f_values)


def _anchored_trapezoid(x: np.ndarray, y: np.ndarray) -> float:
    """Trapezoid over the curve with the segment from (0, 0) to the first node included."""
    if x.size == 0:
        return 0.0
    return float(trapezoid(np.concatenate(([0.0], y)), np.concatenate(([0.0], x))))
