from typing import Sequence

from lognormal_laplace.config import Config
from lognormal_laplace.evaluators import EvaluatorRegistry
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator
from lognormal_laplace.models.approx import ApproxResult
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.services.worker_pool import WorkerPool
from lognormal_laplace.utils.errors import ValidationFailedError
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)


class EvaluationService:
    def __init__(
        self,
        *,
        config: Config,
        evaluator_registry: EvaluatorRegistry,
        worker_pool: WorkerPool,
    ):
        self.config = config
        self.evaluator_registry = evaluator_registry
        self.worker_pool = worker_pool

    def get_evaluator(self, method: str) -> BaseEvaluator:
        try:
            return self.evaluator_registry[method]
        except KeyError as e:
            raise ValidationFailedError('EvaluationService', str(e.args[0])) from None

    def evaluate(
        self, method: str, point: CutPlanePoint, params: LognormalParams, **options
    ) -> ApproxResult:
        return self.get_evaluator(method).evaluate(point, params, **options)

    async def evaluate_grid(
        self,
        method: str,
        points: Sequence[CutPlanePoint],
        params: LognormalParams,
        **options,
    ) -> list[ApproxResult]:
        """
        Evaluates one method over a grid of points concurrently.
        Args:
            method:str: Evaluator name or alias
            points:Sequence[CutPlanePoint]: Grid, in output order
            params:LognormalParams: Lognormal parameters shared by every point
            **options: Method options, forwarded to every evaluation

        Returns:
            Results in the order of points, independent of completion order.
        """
        evaluator = self.get_evaluator(method)
        logger.info(
            'evaluating %(records)s points with %(method)s',
            {LogArgs.records: len(points), LogArgs.method: evaluator.EVALUATOR_NAME},
        )
        return await self.worker_pool.map(
            lambda point: evaluator.evaluate(point, params, **options), points
        )
