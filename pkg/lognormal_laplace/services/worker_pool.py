import asyncio
import contextvars
import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, Iterable, TypeVar

from lognormal_laplace.config import Config
from lognormal_laplace.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar('T')
R = TypeVar('R')


class WorkerPool:
    """Thread pool the services fan grid points out to; results come back in input order."""

    def __init__(self, *, config: Config):
        self.max_workers = config.LNLAPLACE_THREADS or os.cpu_count() or 1
        self.executor = ThreadPoolExecutor(
            max_workers=self.max_workers, thread_name_prefix='lnlaplace'
        )
        logger.debug('worker pool with %s threads', self.max_workers)

    async def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        loop = asyncio.get_running_loop()
        tasks = [
            # log records of the workers keep the run's correlation id
            loop.run_in_executor(self.executor, partial(contextvars.copy_context().run, fn, item))
            for item in items
        ]
        return list(await asyncio.gather(*tasks))

    def shutdown(self):
        self.executor.shutdown(wait=True)

    def __enter__(self) -> 'WorkerPool':
        return self

    def __exit__(self, *exc):
        self.shutdown()
