from functools import lru_cache

from pydantic import BaseSettings

from lognormal_laplace.config.logger import LoggerConfig
from lognormal_laplace.config.numerics import NumericsConfig
from lognormal_laplace.config.runner import RunnerConfig


class Config(LoggerConfig, NumericsConfig, RunnerConfig, BaseSettings):
    VERSION = '0.1.0'

    class Config:
        env_file = ".env"


@lru_cache(maxsize=None)
def default_config() -> Config:
    """Config used when a numeric routine is called without one."""
    return Config()
