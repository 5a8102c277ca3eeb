import asyncio
import logging.config
import sys
import time
from typing import Optional, Sequence

import pydantic

from lognormal_laplace.cli.commands import COMMANDS
from lognormal_laplace.cli.create_parser import build_run_spec, create_parser
from lognormal_laplace.cli.dependencies import create_dependencies
from lognormal_laplace.cli.output import write_records
from lognormal_laplace.config import Config
from lognormal_laplace.utils import logger as logger_module
from lognormal_laplace.utils.errors import BaseLaplaceError, UserMistakes
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)


def run(argv: Optional[Sequence[str]] = None, config: Optional[Config] = None) -> int:
    """Runs one subcommand and returns the exit status."""
    config = config or Config()
    run_id = logger_module.set_new_correlation_id()
    parser = create_parser(config)
    args = parser.parse_args(argv)
    logger_module.set_subcommand(args.subcommand)
    started = time.perf_counter()

    try:
        with create_dependencies(config) as deps:
            spec = build_run_spec(args, deps.evaluators)
            records = asyncio.run(COMMANDS[spec.subcommand](spec, deps))
            write_records(records, spec, config)
    except BaseLaplaceError as e:
        logger.error(*e.to_log_args(), extra=e.to_dict())
        print(f'error: {e}', file=sys.stderr)
        return e.exit_code
    except pydantic.ValidationError as e:
        logger.error(e.errors())
        print(f'error: {e}', file=sys.stderr)
        return UserMistakes.exit_code

    logger.info(
        'run %(run_id)s finished in %(duration).3fs',
        {LogArgs.run_id: run_id, LogArgs.duration: time.perf_counter() - started},
    )
    return 0


def main() -> None:
    """Entrypoint of the application."""
    config = Config()
    logging.config.dictConfig(logger_module.config(config))
    sys.exit(run(config=config))


if __name__ == "__main__":
    main()
