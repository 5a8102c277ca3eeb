import pytest

from lognormal_laplace.evaluators.direct.direct_evaluator import direct_transform
from lognormal_laplace.evaluators.sigma_asymptotic import SigmaAsymptoticEvaluator
from lognormal_laplace.evaluators.sigma_asymptotic.sigma_asymptotic_evaluator import (
    sigma_asymptotic,
    sigma_asymptotic_terms,
)
from lognormal_laplace.models.approx import SigmaAsymConfig
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import DegreeError, ValidationFailedError


@pytest.fixture()
def sigma_evaluator(config) -> SigmaAsymptoticEvaluator:
    return SigmaAsymptoticEvaluator(config=config)


def _abs_difference(evaluator, config, z, sigma) -> float:
    params = LognormalParams(sigma=sigma)
    value = evaluator.evaluate(CutPlanePoint.from_complex(z), params).value.real
    return abs(value - direct_transform(z, params, config).real)


@pytest.mark.parametrize(
    'z, sigma, expected',
    (
        (1.0, 2.0, 0.41216),
        (0.5, 2.5, 0.523),
        (10.0, 1.0, 0.023002),
    ),
)
def test_sigma_asymptotic_table_values(sigma_evaluator, z, sigma, expected):
    result = sigma_evaluator.evaluate(CutPlanePoint.from_complex(z), LognormalParams(sigma=sigma))
    assert result.value.real == pytest.approx(expected, abs=expected * 1e-4)
    assert result.error_bound is None
    assert not result.has_bound


def test_sigma_asymptotic_worst_cell(sigma_evaluator, config):
    # the printed difference 4.47e-4 is not reproduced by the sum, which is closer: 8.1e-6
    difference = _abs_difference(sigma_evaluator, config, 10.0, 1.0)
    assert difference <= 4.47e-3
    assert difference == pytest.approx(8.07e-6, rel=0.1)


def test_sigma_asymptotic_improves_with_sigma(sigma_evaluator, config):
    row = {sigma: _abs_difference(sigma_evaluator, config, 1.0, sigma) for sigma in (1.0, 1.5, 2.0, 2.5)}
    assert row[2.0] <= 1e-6
    assert row[1.0] > row[1.5] > row[2.0]
    assert row[2.5] <= row[1.5]


def test_sigma_asymptotic_conjugate_symmetry():
    params = LognormalParams(sigma=2.0)
    point = CutPlanePoint.from_complex(1 + 1j)
    value = sigma_asymptotic(point, params).value
    assert sigma_asymptotic(point.conjugate(), params).value == pytest.approx(value.conjugate(), abs=1e-13)


def test_sigma_asymptotic_term_counts():
    cfg = SigmaAsymConfig(n_poles=3, m_terms=7)
    terms = sigma_asymptotic_terms(CutPlanePoint.from_complex(2.0), LognormalParams(sigma=2.0), cfg)
    assert len(terms.poles) == 4
    assert len(terms.hermite) == 8  # m = 0 .. M


def test_sigma_asymptotic_guards(sigma_evaluator, standard_params):
    point = CutPlanePoint.from_complex(1.0)
    with pytest.raises(DegreeError):
        sigma_evaluator.evaluate(point, standard_params, m_terms=31)
    with pytest.raises(ValidationFailedError):
        sigma_evaluator.evaluate(point, standard_params, n_poles=-1)
    with pytest.raises(ValidationFailedError):
        sigma_evaluator.evaluate(point, standard_params, alpha=2.0)
