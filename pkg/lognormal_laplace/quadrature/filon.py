"""
Filon quadrature of int g(x) e^{lam x} dx for a complex rate lam.

g is replaced on each panel [x_{2j}, x_{2j+2}] by its quadratic Lagrange
interpolant and every panel integral is taken in closed form.
"""
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, root_validator

from lognormal_laplace.utils.errors import MeshError, ValidationFailedError

SERIES_SWITCH = 0.1  # |lam * half-width| below which the moments come from their Taylor series
SERIES_TERMS = 16
_SERIES_FACTORIALS = np.array([math.factorial(n) for n in range(SERIES_TERMS)], dtype=float)


def panel_moments(lam: complex, half_width: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    m_k = int_{-hh}^{hh} u^k e^{lam u} du for k = 0, 1, 2 and every half-width hh.
    """
    hh = np.asarray(half_width, dtype=float)
    theta = complex(lam) * hh
    small = np.abs(theta) < SERIES_SWITCH

    moments = [np.zeros(hh.shape, dtype=complex) for _ in range(3)]

    if np.any(~small):
        th = theta[~small]
        h = hh[~small]
        la = th / h
        sinh, cosh = np.sinh(th), np.cosh(th)
        moments[0][~small] = 2 * sinh / la
        moments[1][~small] = 2 * h * cosh / la - 2 * sinh / la**2
        moments[2][~small] = 2 * h**2 * sinh / la - 4 * h * cosh / la**2 + 4 * sinh / la**3

    if np.any(small):
        th = theta[small]
        h = hh[small]
        powers = th[:, None] ** np.arange(SERIES_TERMS)[None, :] / _SERIES_FACTORIALS
        n = np.arange(SERIES_TERMS)
        for k in range(3):
            # odd k + n integrate to zero over the symmetric panel
            weights = (1 + (-1.0) ** (k + n)) / (k + n + 1)
            moments[k][small] = h ** (k + 1) * (powers @ weights)

    return moments[0], moments[1], moments[2]


class FilonMesh(BaseModel):
    """
    Nodes x_0 < ... < x_{2N} with samples of g, grouped into N panels of three nodes.
    Coefficients are stored in the panel-local variable u = x - x_c, x_c the panel midpoint.
    """

    nodes: np.ndarray
    samples: np.ndarray
    panel_coeffs: np.ndarray = None

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _odd_and_ordered(cls, values):
        nodes = np.array(values['nodes'], dtype=float)
        samples = np.array(values['samples'])
        if nodes.ndim != 1 or len(nodes) < 3 or len(nodes) % 2 == 0:
            raise MeshError('FilonMesh', f'need an odd number >= 3 of nodes, got {nodes.size}')
        if samples.shape != nodes.shape:
            raise ValidationFailedError(
                'FilonMesh', f'{samples.size} samples for {nodes.size} nodes'
            )
        if not np.all(np.diff(nodes) > 0):
            raise MeshError('FilonMesh', 'nodes must be strictly increasing')
        nodes.setflags(write=False)
        samples.setflags(write=False)
        values['nodes'] = nodes
        values['samples'] = samples
        values['panel_coeffs'] = _lagrange_coefficients(nodes, samples)
        return values

    @classmethod
    def from_samples(cls, nodes: Sequence[float], samples: Sequence[complex]) -> 'FilonMesh':
        return cls(nodes=np.asarray(nodes, dtype=float), samples=np.asarray(samples))

    @property
    def panels(self) -> int:
        return (len(self.nodes) - 1) // 2

    @property
    def centers(self) -> np.ndarray:
        return (self.nodes[:-2:2] + self.nodes[2::2]) / 2

    @property
    def half_widths(self) -> np.ndarray:
        return (self.nodes[2::2] - self.nodes[:-2:2]) / 2

    def integrate(self, lam: complex) -> complex:
        """sum over panels of int (c0 + c1 u + c2 u^2) e^{lam (x_c + u)} du"""
        m0, m1, m2 = panel_moments(lam, self.half_widths)
        c = self.panel_coeffs
        panel = c[:, 0] * m0 + c[:, 1] * m1 + c[:, 2] * m2
        with np.errstate(under='ignore'):
            shift = np.exp(complex(lam) * self.centers)
        return complex(np.sum(shift * panel))


def _lagrange_coefficients(nodes: np.ndarray, samples: np.ndarray) -> np.ndarray:
    x0, x1, x2 = nodes[:-2:2], nodes[1:-1:2], nodes[2::2]
    g0, g1, g2 = samples[:-2:2], samples[1:-1:2], samples[2::2]
    center = (x0 + x2) / 2
    u0, u1, u2 = x0 - center, x1 - center, x2 - center
    # divided differences
    d1 = (g1 - g0) / (u1 - u0)
    d12 = (g2 - g1) / (u2 - u1)
    d2 = (d12 - d1) / (u2 - u0)
    c0 = g0 - d1 * u0 + d2 * u0 * u1
    c1 = d1 - d2 * (u0 + u1)
    coeffs = np.stack([c0, c1, d2], axis=1)
    coeffs.setflags(write=False)
    return coeffs
