from pydantic import BaseSettings


class RunnerConfig(BaseSettings):
    LNLAPLACE_THREADS: int = 0  # 0 picks os.cpu_count()
    EVAL_DIGITS: int = 17
    TABLE_DIGITS: int = 5
