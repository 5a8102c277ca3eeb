import cmath
import math

import numpy as np
import pytest
from scipy import special

from lognormal_laplace.evaluators.continuation.continuation_evaluator import continued_transform
from lognormal_laplace.evaluators.mellin_barnes.mellin_barnes_evaluator import (
    mellin_barnes_transform,
)
from lognormal_laplace.evaluators.small_z_series import SmallZSeriesEvaluator
from lognormal_laplace.evaluators.small_z_series.small_z_series_evaluator import (
    certified_series,
    divergence_onset,
    divergence_witness,
    point_error_bound,
    pole_series_terms,
    sharp_error_bound,
    small_z_error_bound,
    small_z_series,
    truncation_tail_bound,
)
from lognormal_laplace.models.approx import SmallZConfig
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import TermOverflow, ValidationFailedError


@pytest.fixture()
def series_evaluator(config) -> SmallZSeriesEvaluator:
    return SmallZSeriesEvaluator(config=config)


@pytest.mark.parametrize(
    'z, sigma, expected',
    (
        (1.0, 0.25, 0.36804),
        (5.0, 0.75, 0.045898),
    ),
)
def test_series_table_values(series_evaluator, z, sigma, expected):
    result = series_evaluator.evaluate(CutPlanePoint.from_complex(z), LognormalParams(sigma=sigma))
    assert result.value.real == pytest.approx(expected, abs=expected * 1e-4)
    assert result.method == 'small_z_series'
    assert result.has_bound


def test_series_near_origin(series_evaluator, standard_params):
    result = series_evaluator.evaluate(CutPlanePoint.from_complex(1e-10), standard_params)
    assert result.value == pytest.approx(1, abs=1e-6)


def test_uniform_error_bound():
    assert small_z_error_bound(10, 1.0) == pytest.approx(2.51838e-3, rel=1e-5)
    assert small_z_error_bound(11, 1.0) / small_z_error_bound(10, 1.0) == pytest.approx(math.exp(-1))
    with pytest.raises(ValidationFailedError):
        small_z_error_bound(0.5, 1.0)
    with pytest.raises(ValidationFailedError):
        small_z_error_bound(10, 0.0)


def test_point_error_bound(standard_params):
    uniform = small_z_error_bound(10, 1.0)
    assert point_error_bound(CutPlanePoint.from_complex(2 + 1j), standard_params, 10) <= uniform
    assert point_error_bound(CutPlanePoint.on_cut(3.0), standard_params, 10) == pytest.approx(uniform)
    # negative abscissas decay like |z|^{|k|} near the origin
    near = point_error_bound(CutPlanePoint.from_complex(1e-3), standard_params, 10, k=-1)
    assert near < 1e-3 * uniform
    with pytest.raises(ValidationFailedError):
        point_error_bound(CutPlanePoint.from_complex(1.0), standard_params, 10, k=2)


def _rigor_cases(n: int) -> list[tuple[CutPlanePoint, LognormalParams, float]]:
    rng = np.random.default_rng(20240917)
    cases = []
    for i in range(n):
        r = rng.uniform(0.1, 3.0)
        point = (
            CutPlanePoint.on_cut(r) if i % 5 == 0 else CutPlanePoint.from_complex(cmath.rect(r, rng.uniform(-3, 3)))
        )
        params = LognormalParams(mu=rng.uniform(-0.5, 0.5), sigma=(0.5, 1.0, 2.0)[i % 3])
        cases.append((point, params, float(rng.choice([2.0, 5.0, 10.0]))))
    return cases


@pytest.mark.parametrize('point, params, alpha', _rigor_cases(30))
def test_series_error_bound_is_rigorous(config, point, params, alpha):
    result = small_z_series(point, params, SmallZConfig(alpha=alpha, n_terms=41))
    exact = mellin_barnes_transform(point, params, config=config)
    assert abs(result.value - exact) <= result.error_bound + 1e-9


def test_series_error_shrinks_towards_origin(config, standard_params):
    errors = []
    for j in range(1, 7):
        point = CutPlanePoint.from_complex(10.0**-j)
        exact = continued_transform(point, standard_params, config)
        value = small_z_series(point, standard_params, SmallZConfig(alpha=10, n_terms=1)).value
        errors.append(abs(value - exact) / abs(exact))
    assert all(a > b for a, b in zip(errors, errors[1:]))
    # led by z e^{sigma^2 / 2}
    assert errors[-1] == pytest.approx(1e-6 * math.exp(0.5), rel=0.01)


def test_sharp_error_bound_near_origin_on_cut():
    point, params = CutPlanePoint.on_cut(0.01), LognormalParams(sigma=0.25)
    assert point_error_bound(point, params, 10) > 1e30
    assert sharp_error_bound(point, params, 10, 41) < 1e-30
    assert sharp_error_bound(CutPlanePoint.on_cut(0.01), LognormalParams(sigma=1.0), 10, 41) > 1e-9


def test_certified_series_on_cut(config):
    point, params = CutPlanePoint.on_cut(0.01), LognormalParams(sigma=0.25)
    result = certified_series(point, params, SmallZConfig(alpha=10, n_terms=41))
    assert result.method == 'small_z_series'
    assert 0 < result.error_bound < 1e-11
    assert result.value == pytest.approx(1.010374313, abs=1e-9)
    assert abs(result.value.imag) < 1e-11


@pytest.mark.parametrize('point, params, alpha', _rigor_cases(30)[::3])
def test_certified_series_bound_is_rigorous(config, point, params, alpha):
    result = certified_series(point, params, SmallZConfig(alpha=alpha, n_terms=41))
    exact = mellin_barnes_transform(point, params, config=config)
    assert abs(result.value - exact) <= result.error_bound + 1e-9


def test_series_truncation_is_second_order(config, standard_params):
    # with terms n = 0, 1 the error is led by the n = 2 summand z^2 e^{2 sigma^2} / 2
    for z in (1e-2, 1e-3):
        point = CutPlanePoint.from_complex(z)
        result = small_z_series(point, standard_params, SmallZConfig(alpha=10, n_terms=2))
        exact = continued_transform(point, standard_params, config)
        assert abs(result.value - exact) / z**2 == pytest.approx(math.exp(2) / 2, rel=0.1)


def test_pole_terms_match_erfc_form():
    params = LognormalParams(sigma=0.5)
    z, alpha = 0.5, 10.0
    terms = pole_series_terms(CutPlanePoint.from_complex(z), params, alpha, 6)
    for n, term in enumerate(terms):
        w = (math.log(z / alpha) + 0.25 * n) / (math.sqrt(2) * 0.5)
        expected = (-z) ** n / math.factorial(n) * math.exp(0.25 * n * n / 2) * special.erfc(w) / 2
        assert term == pytest.approx(expected, rel=1e-12, abs=1e-300)


def test_pole_terms_overflow_on_cut_for_small_sigma():
    with pytest.raises(TermOverflow):
        pole_series_terms(CutPlanePoint.on_cut(1.0), LognormalParams(sigma=0.05), 10.0, 41)


def test_truncation_tail_bound(standard_params):
    point = CutPlanePoint.from_complex(1.0)
    assert truncation_tail_bound(point, 10.0, 1.0, 9) == math.inf
    assert truncation_tail_bound(point, 10.0, 1.0, 0) == math.inf
    assert truncation_tail_bound(point, 10.0, 1.0, 41) < 1e-6
    assert truncation_tail_bound(point, 10.0, 1.0, 60) < truncation_tail_bound(point, 10.0, 1.0, 41)
    shifted = truncation_tail_bound(CutPlanePoint.from_complex(1e-3), 10.0, 1.0, 41, k=-10)
    assert shifted < truncation_tail_bound(CutPlanePoint.from_complex(1e-3), 10.0, 1.0, 41)
    with pytest.raises(ValidationFailedError):
        truncation_tail_bound(point, 10.0, 1.0, 41, k=-41)


def test_divergence_witness(standard_params):
    with pytest.raises(TermOverflow) as e:
        divergence_witness(1.0, standard_params, 100)
    assert e.value.kwargs['n'] == 41
    sums = e.value.kwargs['partial_sums']
    assert len(sums) == 41
    assert sums[-1] > 1e100
    assert divergence_witness(0, standard_params, 3) == [1.0] * 4


def test_divergence_onset(standard_params):
    z = 0.1
    onset = divergence_onset(z, standard_params)
    assert onset <= 30

    def ratio(n):
        return z * math.exp(n + 0.5) / (n + 1)

    assert all(ratio(n) > 1 for n in range(onset, onset + 50))
    if onset > 0:
        assert ratio(onset - 1) <= 1
    with pytest.raises(ValidationFailedError):
        divergence_onset(0, standard_params)


def test_series_evaluator_options(series_evaluator, standard_params):
    point = CutPlanePoint.from_complex(0.5 + 0.5j)
    result = series_evaluator.evaluate(point, standard_params, alpha=5.0, n_terms=30, k_bound=0.5)
    expected = point_error_bound(point, standard_params, 5.0, 0.5) + truncation_tail_bound(
        point, 5.0, 1.0, 30
    )
    assert result.error_bound == pytest.approx(expected)


@pytest.mark.parametrize(
    'options',
    (
        {'alpha': 0.5},
        {'n_terms': 501},
        {'n_terms': 0},
        {'k_bound': 2.0},
        {'k': 1.0},
    ),
)
def test_series_evaluator_guards(series_evaluator, standard_params, options):
    with pytest.raises(ValidationFailedError):
        series_evaluator.evaluate(CutPlanePoint.from_complex(1.0), standard_params, **options)
