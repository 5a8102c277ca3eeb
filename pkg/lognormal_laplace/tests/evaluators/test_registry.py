import pytest

from lognormal_laplace.evaluators import EvaluatorRegistry
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.evaluators.direct import DirectEvaluator
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    NonFiniteError,
    TermOverflow,
    ValidationFailedError,
)


@pytest.mark.parametrize(
    'selector, name',
    (
        ('mb', 'mellin_barnes'),
        ('mellin_barnes', 'mellin_barnes'),
        ('series', 'small_z_series'),
        ('sigma-asym', 'sigma_asymptotic'),
        ('filon', 'continuation'),
        ('direct', 'direct'),
        ('quad', 'direct'),
    ),
)
def test_registry_resolves_aliases(evaluator_registry, selector, name):
    assert evaluator_registry[selector].EVALUATOR_NAME == name
    assert selector in evaluator_registry


def test_registry_unknown_method(evaluator_registry):
    assert 'laguerre' not in evaluator_registry
    assert evaluator_registry.get('laguerre') is None
    with pytest.raises(KeyError, match='Unknown method'):
        evaluator_registry['laguerre']
    assert sorted(evaluator_registry.names()) == [
        'continuation',
        'direct',
        'mellin_barnes',
        'sigma_asymptotic',
        'small_z_series',
    ]


def test_registry_only_holds_given_evaluators(config, evaluators_config):
    registry = EvaluatorRegistry(DirectEvaluator(config=config), aliases=evaluators_config)
    assert [repr(e) for e in registry] == ['DirectEvaluator(direct)']
    assert registry.get('mb') is None


def test_every_evaluator_rejects_unknown_options(evaluator_registry, standard_params):
    point = CutPlanePoint.from_complex(1)
    for evaluator in evaluator_registry:
        with pytest.raises(ValidationFailedError) as e:
            evaluator.evaluate(point, standard_params, polish=True)
        assert e.value.kwargs['method'] == evaluator.EVALUATOR_NAME


class _Failing(BaseEvaluator):
    EVALUATOR_NAME = 'failing'

    def evaluate(self, point, params, **options):
        raise NotImplementedError


@pytest.mark.parametrize(
    'exception, expected',
    (
        (TermOverflow('source', 'n = 3'), TermOverflow),
        (TypeError('bad option'), ValidationFailedError),
        (OverflowError('math range error'), NonFiniteError),
        (ZeroDivisionError('float division by zero'), NonFiniteError),
    ),
)
def test_handle_exception(config, exception, expected):
    handled = _Failing(config=config).handle_exception(exception, z='1')
    assert isinstance(handled, expected)
    assert isinstance(handled, BaseLaplaceError)
    assert handled.kwargs['z'] == '1'


def test_handle_exception_reraises_foreign_errors(config):
    with pytest.raises(KeyError):
        _Failing(config=config).handle_exception(KeyError('x'))
