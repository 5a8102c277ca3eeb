from typing import NamedTuple

from lognormal_laplace.config import Config
from lognormal_laplace.config.tables import TablesConfig
from lognormal_laplace.evaluators import EvaluatorRegistry
from lognormal_laplace.evaluators.direct.direct_evaluator import direct_transform
from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import LognormalParams
from lognormal_laplace.models.tables import GoldenTable
from lognormal_laplace.services.worker_pool import WorkerPool
from lognormal_laplace.utils.errors import ValidationFailedError
from lognormal_laplace.utils.logger import get_logger

logger = get_logger(__name__)

BENCHMARK_NOTE = 'benchmark: direct quadrature, absolute tolerance %g'


class Cell(NamedTuple):
    z: float
    sigma: float


class TableService:
    def __init__(
        self,
        *,
        config: Config,
        evaluator_registry: EvaluatorRegistry,
        worker_pool: WorkerPool,
        tables: TablesConfig,
    ):
        self.config = config
        self.evaluator_registry = evaluator_registry
        self.worker_pool = worker_pool
        self.tables = tables

    def get_table(self, table_id: int) -> GoldenTable:
        if table_id not in self.tables:
            raise ValidationFailedError(
                'TableService', f'unknown table {table_id}, expected one of {list(self.tables)}'
            )
        return self.tables[table_id]

    def compute_cell(self, table: GoldenTable, cell: Cell) -> float:
        params = LognormalParams(mu=table.mu, sigma=cell.sigma)
        point = CutPlanePoint.from_complex(cell.z)
        evaluator = self.evaluator_registry[table.method]
        value = evaluator.evaluate(point, params, **table.options).value.real
        if table.kind == 'absolute_difference':
            return abs(value - direct_transform(cell.z, params, self.config).real)
        return value

    async def compute(self, table_id: int) -> list[list[float]]:
        """
        Recomputes every cell of a golden table.

        Returns:
            Rows following table.z, columns following table.sigma.
        """
        table = self.get_table(table_id)
        cells = [Cell(z, sigma) for z in table.z for sigma in table.sigma]
        logger.info('computing table %s, %s cells', table.id, len(cells))
        flat = await self.worker_pool.map(lambda cell: self.compute_cell(table, cell), cells)
        width = len(table.sigma)
        return [flat[i : i + width] for i in range(0, len(flat), width)]

    def footer(self, table: GoldenTable) -> list[str]:
        comments = [f'table {table.id}: {table.title}', f'mu = {table.mu:g}']
        if table.kind == 'absolute_difference':
            comments.append(BENCHMARK_NOTE % self.config.DIRECT_ABS_TOL)
        return comments
