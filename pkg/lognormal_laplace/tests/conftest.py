import pytest

from lognormal_laplace.config import Config
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.tests.fixtures import *  # noqa: F401, F403


@pytest.fixture(scope='session')
def config():
    return Config()


@pytest.fixture()
def standard_params() -> LognormalParams:
    return LognormalParams(mu=0.0, sigma=1.0)
