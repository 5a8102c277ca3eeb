from pydantic import BaseModel

from lognormal_laplace.config import Config
from lognormal_laplace.config.evaluators import EvaluatorsConfig
from lognormal_laplace.config.tables import TablesConfig
from lognormal_laplace.evaluators import EvaluatorRegistry
from lognormal_laplace.evaluators.continuation import ContinuationEvaluator
from lognormal_laplace.evaluators.direct import DirectEvaluator
from lognormal_laplace.evaluators.mellin_barnes import MellinBarnesEvaluator
from lognormal_laplace.evaluators.sigma_asymptotic import SigmaAsymptoticEvaluator
from lognormal_laplace.evaluators.small_z_series import SmallZSeriesEvaluator
from lognormal_laplace.services.density_service import DensityService
from lognormal_laplace.services.evaluation_service import EvaluationService
from lognormal_laplace.services.table_service import TableService
from lognormal_laplace.services.worker_pool import WorkerPool


class Dependencies(BaseModel):
    """
    Holds the dependencies that should exist for the lifetime of one CLI run.
    """

    config: Config
    evaluators: EvaluatorsConfig
    evaluator_registry: EvaluatorRegistry
    worker_pool: WorkerPool
    evaluation_service: EvaluationService
    density_service: DensityService
    table_service: TableService

    class Config:
        arbitrary_types_allowed = True
        extra = "forbid"
        allow_mutation = False

    def close(self):
        self.worker_pool.shutdown()

    def __enter__(self) -> 'Dependencies':
        return self

    def __exit__(self, *exc):
        self.close()


def create_registry(config: Config, evaluators: EvaluatorsConfig = None) -> EvaluatorRegistry:
    evaluators = evaluators or EvaluatorsConfig()
    return EvaluatorRegistry(
        DirectEvaluator(config=config),
        ContinuationEvaluator(config=config),
        MellinBarnesEvaluator(config=config),
        SmallZSeriesEvaluator(config=config),
        SigmaAsymptoticEvaluator(config=config),
        aliases=evaluators,
    )


def create_dependencies(config: Config) -> Dependencies:
    evaluators = EvaluatorsConfig()
    evaluator_registry = create_registry(config, evaluators)
    worker_pool = WorkerPool(config=config)
    return Dependencies(
        config=config,
        evaluators=evaluators,
        evaluator_registry=evaluator_registry,
        worker_pool=worker_pool,
        evaluation_service=EvaluationService(
            config=config,
            evaluator_registry=evaluator_registry,
            worker_pool=worker_pool,
        ),
        density_service=DensityService(
            config=config,
            evaluator_registry=evaluator_registry,
            worker_pool=worker_pool,
        ),
        table_service=TableService(
            config=config,
            evaluator_registry=evaluator_registry,
            worker_pool=worker_pool,
            tables=TablesConfig(),
        ),
    )
