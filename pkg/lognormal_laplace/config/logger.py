from pydantic import BaseSettings


class LoggerConfig(BaseSettings):
    LOGGING_LEVEL: str = 'WARNING'
    LOGSTASH_LOGGING_LEVEL: str = 'DEBUG'
    LOG_HANDLERS: list = ['console']
    LOGSTASH: str = 'localhost'
    PORT: int = 5959
