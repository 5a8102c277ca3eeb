from contextvars import ContextVar
from logging import LoggerAdapter, getLogger
from typing import TYPE_CHECKING, Optional
from uuid import uuid4

if TYPE_CHECKING:
    from lognormal_laplace.config import Config

CORRELATION_ID = "cid"
SUBCOMMAND = "subcommand"
ERR = "err"  # error object log argument
ERR_TYPE = "err_type"  # error type log argument

# keyword argument of Logger._log, never renamed
EXTRA = "extra"


def config(lognormal_config: 'Config'):
    return dict(
        # `disable_existing_loggers` has the same meaning as in logging.config.fileConfig
        disable_existing_loggers=False,
        version=1,
        formatters={
            'simple': {
                'format': '%(asctime)s - %(filename)s:%(lineno)s:%(funcName)s - %(levelname)s - %(message)s'
            },
            'logstash': {'()': 'logstash_formatter.LogstashFormatterV1'},
        },
        handlers={
            'console': {
                'class': 'logging.StreamHandler',
                'level': lognormal_config.LOGGING_LEVEL,
                'formatter': 'simple',
                # stdout carries the emitted records
                'stream': 'ext://sys.stderr',
            },
            'logstash': {
                'level': lognormal_config.LOGSTASH_LOGGING_LEVEL,
                'class': 'logstash_async.handler.AsynchronousLogstashHandler',
                'transport': 'logstash_async.transport.TcpTransport',
                'formatter': 'logstash',
                'host': lognormal_config.LOGSTASH,
                'port': lognormal_config.PORT,
                'database_path': None,
                'event_ttl': 30,  # sec
            },
        },
        root={
            'handlers': lognormal_config.LOG_HANDLERS,
            'level': lognormal_config.LOGGING_LEVEL,
        },
    )


correlation_id = ContextVar(CORRELATION_ID, default=uuid4().hex)
subcommand = ContextVar(SUBCOMMAND, default=None)


class CustomContextLogger(LoggerAdapter):
    def __init__(self, logger, extra):
        super(CustomContextLogger, self).__init__(logger, extra)

    def process(self, msg, kwargs):
        if EXTRA not in kwargs:
            kwargs[EXTRA] = dict(self.extra)
        else:
            kwargs[EXTRA].update(self.extra)

        # every record of one CLI run shares the run id
        kwargs[EXTRA][CORRELATION_ID] = self.get_correlation_id()

        command = kwargs[EXTRA].get(SUBCOMMAND, self.get_subcommand())
        if command:
            kwargs[EXTRA][SUBCOMMAND] = command

        if ERR in kwargs[EXTRA] and ERR_TYPE not in kwargs[EXTRA]:
            kwargs[EXTRA][ERR_TYPE] = type(kwargs[EXTRA][ERR]).__name__

        return msg, kwargs

    @staticmethod
    def get_correlation_id():
        return correlation_id.get()

    @staticmethod
    def get_subcommand():
        return subcommand.get()


class LogArgs:
    method = "method"  # evaluator name
    source = "source"  # operation that raised
    z = "z"
    mu = "mu"
    sigma = "sigma"
    alpha = "alpha"
    n_terms = "n_terms"
    nodes = "nodes"
    truncation = "truncation"  # half-width T of a vertical contour
    step = "step"
    component = "component"  # index j of a lognormal component
    t = "t"
    x = "x"
    run_id = "run_id"
    duration = "duration"
    records = "records"


def get_logger(
    name: str, extra: Optional[dict] = None, corr_id: Optional[str] = None
) -> "CustomContextLogger":
    extra = extra or {}

    if corr_id:
        correlation_id.set(corr_id)

    logger = CustomContextLogger(getLogger(name), extra)
    return logger


def set_correlation_id(corr_id: str):
    correlation_id.set(corr_id)


def set_new_correlation_id() -> str:
    run_id = uuid4().hex
    set_correlation_id(run_id)
    return run_id


def set_subcommand(name: str):
    subcommand.set(name)
