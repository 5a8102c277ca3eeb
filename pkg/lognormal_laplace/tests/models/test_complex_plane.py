import cmath
import math

import pytest

from lognormal_laplace.models.complex_plane import Boundary, ContourSpec, CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import (
    BranchCutError,
    ContourError,
    ValidationFailedError,
)


@pytest.mark.parametrize('z', (0, -1, -0.5 + 0j, complex(-3, 0.0)))
def test_interior_points_avoid_the_cut(z):
    with pytest.raises(BranchCutError, match='z on branch cut or at origin'):
        CutPlanePoint.from_complex(z)


def test_non_finite_point():
    with pytest.raises(ValidationFailedError):
        CutPlanePoint(re=math.nan, im=1.0)


def test_upper_limit_points():
    point = CutPlanePoint.on_cut(2.0)
    assert point.is_boundary
    assert point.boundary is Boundary.upper_limit
    assert point.arg == math.pi
    assert point.log() == complex(math.log(2.0), math.pi)
    assert str(point) == '-2+i0'
    with pytest.raises(BranchCutError):
        CutPlanePoint.on_cut(-1.0)
    with pytest.raises(ValidationFailedError):
        point.conjugate()


def test_upper_limit_is_the_limit_of_interior_points():
    interior = CutPlanePoint.from_complex(-2 + 1e-300j)
    assert interior.log() == pytest.approx(CutPlanePoint.on_cut(2.0).log(), abs=1e-15)
    assert CutPlanePoint.from_complex(-2, upper_limit=True) == CutPlanePoint.on_cut(2.0)


def test_interior_log_and_conjugate():
    point = CutPlanePoint.from_complex(1 - 2j)
    assert point.log() == cmath.log(1 - 2j)
    assert point.conjugate().value == 1 + 2j
    assert point.modulus == pytest.approx(math.sqrt(5))


def test_contour_for_point(config):
    params = LognormalParams(sigma=1.0)
    contour = ContourSpec.for_point(CutPlanePoint.from_complex(1), params, config=config)
    assert contour.k == config.MB_DEFAULT_K
    assert contour.T == pytest.approx(math.sqrt(2 * math.log(1 / config.MB_MAJORANT_RATIO)))
    assert contour.h == pytest.approx(0.1)

    boundary = ContourSpec.for_point(CutPlanePoint.on_cut(1), LognormalParams(sigma=0.5), k=0.3, config=config)
    assert boundary.T == pytest.approx((math.pi / 0.5 + math.sqrt(2 * math.log(1e16))) / 0.5)
    assert boundary.h == pytest.approx(0.05)


def test_coarse_contour_is_rejected():
    with pytest.raises(ContourError):
        ContourSpec(k=1.0, T=1.0, h=0.1)
