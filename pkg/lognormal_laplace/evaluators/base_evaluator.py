from abc import ABC, abstractmethod

from pydantic import ValidationError

from lognormal_laplace.config import Config
from lognormal_laplace.models.approx import ApproxResult
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.utils.errors import (
    BaseLaplaceError,
    NonFiniteError,
    ValidationFailedError,
)
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)


class BaseEvaluator(ABC):
    EVALUATOR_NAME = 'base_evaluator'

    def __init__(self, *, config: Config, **_):
        self.config = config

    @abstractmethod
    def evaluate(
        self, point: CutPlanePoint, params: LognormalParams, **options
    ) -> ApproxResult:
        """
        The evaluate function computes phi(z; mu, sigma) at one point of the cut plane.
        Args:
            self: Access the class attributes
            point:CutPlanePoint: Argument z, interior or an upper-limit point -t + i0
            params:LognormalParams: Lognormal parameters (mu, sigma)
            **options: Method specific settings, unknown keys are rejected

        Returns:
            An ApproxResult with the value and, when the method has one, a rigorous error bound.
        """

    def handle_exception(self, exception: Exception, **kwargs) -> BaseLaplaceError:
        if isinstance(exception, BaseLaplaceError):
            exc = exception.with_context(method=self.EVALUATOR_NAME, **kwargs)
        elif isinstance(exception, (ValidationError, TypeError)):
            exc = ValidationFailedError(self.EVALUATOR_NAME, str(exception), **kwargs)
        elif isinstance(exception, (OverflowError, ZeroDivisionError, FloatingPointError)):
            exc = NonFiniteError(self.EVALUATOR_NAME, str(exception), **kwargs)
        else:
            raise exception
        logger.debug(*exc.to_log_args(), extra={LogArgs.method: self.EVALUATOR_NAME})
        return exc

    def __repr__(self):
        return f'{self.__class__.__name__}({self.EVALUATOR_NAME})'
