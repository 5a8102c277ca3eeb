import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from lognormal_laplace.evaluators.direct.direct_evaluator import direct_transform
from lognormal_laplace.evaluators.mellin_barnes import MellinBarnesEvaluator
from lognormal_laplace.evaluators.mellin_barnes.mellin_barnes_evaluator import (
    characteristic_function,
    decay_bound,
    leipnik_formula,
    mellin_barnes_derivative,
    mellin_barnes_log_transform,
    mellin_barnes_transform,
    mellin_closed_form,
)
from lognormal_laplace.models.complex_plane import ContourSpec, CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import ContourError, ValidationFailedError


@pytest.mark.parametrize(
    'z, sigma, expected',
    (
        (1.0, 1.0, 0.38176),
        (3.0, 2.0, 0.24163),
    ),
)
def test_mellin_barnes_values(config, z, sigma, expected):
    result = MellinBarnesEvaluator(config=config).evaluate(
        CutPlanePoint.from_complex(z), LognormalParams(sigma=sigma)
    )
    assert result.value.real == pytest.approx(expected, abs=5e-5)
    assert abs(result.value.imag) < 1e-12
    assert result.error_bound is None


def test_mellin_barnes_matches_direct(config):
    params = LognormalParams(mu=-0.3, sigma=0.7)
    for z in (0.5, 2.0, 1 + 3j, 4 - 1j):
        value = mellin_barnes_transform(CutPlanePoint.from_complex(z), params, config=config)
        assert value == pytest.approx(direct_transform(z, params, config), abs=1e-10)


def test_mellin_barnes_abscissa_invariance(config, standard_params):
    point = CutPlanePoint.from_complex(-1 + 0.5j)
    values = [
        mellin_barnes_transform(
            point, standard_params, ContourSpec.for_point(point, standard_params, k=k, config=config), config
        )
        for k in (0.5, 1.0, 2.0, 3.0)
    ]
    for value in values[1:]:
        assert value == pytest.approx(values[0], rel=1e-10, abs=1e-9)


def test_mellin_barnes_rejects_nonpositive_abscissa(config, standard_params):
    with pytest.raises(ContourError):
        MellinBarnesEvaluator(config=config).evaluate(
            CutPlanePoint.from_complex(1.0), standard_params, k=-0.5
        )


def test_mellin_closed_form(standard_params):
    assert mellin_closed_form(1, standard_params) == pytest.approx(math.exp(0.5), rel=1e-14)
    assert mellin_closed_form(2, standard_params) == pytest.approx(math.exp(2), rel=1e-14)
    with pytest.raises(ValidationFailedError):
        mellin_closed_form(-0.5, standard_params)


@pytest.mark.parametrize('s', (1.0, 1.5, 2.0))
def test_mellin_transform_of_direct_quadrature(config, s):
    params = LognormalParams(sigma=0.5)
    value, _ = quad(
        lambda x: x ** (s - 1) * direct_transform(x, params, config).real,
        0,
        np.inf,
        epsabs=1e-10,
        limit=200,
    )
    assert value == pytest.approx(mellin_closed_form(s, params).real, rel=1e-6)


@pytest.mark.parametrize('k', (1.0, 2.0))
def test_decay_bound(config, standard_params, k):
    bound = decay_bound(k, standard_params)
    for radius in (10.0, 100.0, 1000.0):
        point = CutPlanePoint.from_complex(cmath.rect(radius, math.pi / 4))
        value = mellin_barnes_transform(point, standard_params, config=config)
        assert abs(value) <= bound * radius**-k
    on_cut = mellin_barnes_transform(CutPlanePoint.on_cut(10.0), standard_params, config=config)
    assert abs(on_cut) <= bound * 10.0**-k


def test_derivative_matches_difference_quotient(config, standard_params):
    z = 1.5 + 0.5j
    eps = 1e-5
    forward = mellin_barnes_transform(CutPlanePoint.from_complex(z + eps), standard_params, config=config)
    backward = mellin_barnes_transform(CutPlanePoint.from_complex(z - eps), standard_params, config=config)
    derivative = mellin_barnes_derivative(CutPlanePoint.from_complex(z), standard_params, config=config)
    assert derivative == pytest.approx((forward - backward) / (2 * eps), abs=1e-8)
    # phi'(x) = -E[X e^{-xX}] is negative on the positive axis
    assert mellin_barnes_derivative(CutPlanePoint.from_complex(1.0), standard_params, config=config).real < 0


def test_characteristic_function_symmetry(config, standard_params):
    value = characteristic_function(2.0, standard_params, config=config)
    assert characteristic_function(-2.0, standard_params, config=config) == pytest.approx(
        value.conjugate(), abs=1e-12
    )
    for t in (0.1, 1.0, 5.0):
        assert abs(characteristic_function(t, standard_params, config=config)) <= 1 + 1e-12
    with pytest.raises(ValidationFailedError):
        characteristic_function(0.0, standard_params, config=config)


def test_characteristic_function_against_quad(config, standard_params):
    def weight(v):
        return math.exp(-v * v / 2) / math.sqrt(2 * math.pi)

    re, _ = quad(lambda v: math.cos(math.exp(v)) * weight(v), -12, 8, epsabs=1e-12, limit=1000)
    im, _ = quad(lambda v: math.sin(math.exp(v)) * weight(v), -12, 8, epsabs=1e-12, limit=1000)
    value = characteristic_function(1.0, standard_params, config=config)
    assert value == pytest.approx(complex(re, im), abs=1e-7)


def test_leipnik_formula_is_not_the_characteristic_function(config, standard_params):
    small = leipnik_formula(1e-2, 1.0, -1.0, config)
    assert abs(small) <= 0.1
    assert abs(characteristic_function(1e-2, standard_params, config=config)) >= 0.9

    gap = leipnik_formula(1.0, 1.0, 0.5, config) - characteristic_function(1.0, standard_params, config=config)
    assert abs(gap) > 1e-2


def test_leipnik_formula_abscissa_invariance(config):
    values = [leipnik_formula(1.0, 1.0, k, config) for k in (0.25, 0.5, -0.5)]
    for value in values[1:]:
        assert value == pytest.approx(values[0], rel=1e-10, abs=1e-9)


def test_leipnik_formula_is_half_a_sheet_difference(config, standard_params):
    t = 1.0
    lower = mellin_barnes_log_transform(complex(math.log(t), -math.pi / 2), standard_params, config=config)
    upper = mellin_barnes_log_transform(complex(math.log(t), 3 * math.pi / 2), standard_params, config=config)
    assert leipnik_formula(t, 1.0, 0.5, config) == pytest.approx((lower - upper) / 2, rel=1e-10, abs=1e-8)


def test_leipnik_formula_guards(config):
    with pytest.raises(ValidationFailedError):
        leipnik_formula(0.0, 1.0, 0.5, config)
    with pytest.raises(ValidationFailedError):
        leipnik_formula(1.0, -1.0, 0.5, config)
