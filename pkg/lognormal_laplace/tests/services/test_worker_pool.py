import time

import pytest

from lognormal_laplace.config import Config
from lognormal_laplace.services.worker_pool import WorkerPool
from lognormal_laplace.utils import logger as logger_module


@pytest.mark.asyncio()
async def test_map_keeps_input_order(worker_pool):
    def slow_square(x):
        time.sleep(0.01 * (5 - x))
        return x * x

    assert await worker_pool.map(slow_square, range(5)) == [0, 1, 4, 9, 16]


@pytest.mark.asyncio()
async def test_map_propagates_correlation_id(worker_pool):
    logger_module.set_correlation_id('run-42')
    ids = await worker_pool.map(lambda _: logger_module.correlation_id.get(), range(8))
    assert ids == ['run-42'] * 8


@pytest.mark.asyncio()
async def test_map_raises_worker_errors(worker_pool):
    def fail(x):
        if x == 2:
            raise ValueError('bad item')
        return x

    with pytest.raises(ValueError, match='bad item'):
        await worker_pool.map(fail, range(4))


def test_thread_count_from_config():
    with WorkerPool(config=Config(LNLAPLACE_THREADS=3)) as pool:
        assert pool.max_workers == 3
