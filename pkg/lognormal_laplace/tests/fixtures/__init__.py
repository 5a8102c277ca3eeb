from .evaluators import direct_evaluator, evaluator_registry, evaluators_config
from .services import density_service, evaluation_service, table_service, tables, worker_pool
