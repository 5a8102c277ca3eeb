from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from lognormal_laplace.models.complex_plane import CutPlanePoint
from lognormal_laplace.models.params import ComponentList, LognormalParams


class Subcommand(str, Enum):
    eval = 'eval'
    table = 'table'
    density = 'density'
    thorin = 'thorin'
    leipnik_demo = 'leipnik-demo'


class OutputFormat(str, Enum):
    csv = 'csv'
    json = 'json'


class RunSpec(BaseModel):
    """One validated CLI invocation."""

    subcommand: Subcommand
    method: Optional[str] = None  # evaluator name, aliases already resolved
    params: Optional[LognormalParams] = None
    components: Optional[ComponentList] = None
    points: tuple[CutPlanePoint, ...] = ()  # eval grid
    reals: tuple[float, ...] = ()  # x nodes, t values
    options: dict = {}  # method options such as alpha, n_terms, k
    table_id: Optional[int] = None
    output_format: OutputFormat = OutputFormat.csv
    out: Optional[Path] = None

    class Config:
        frozen = True


class RecordSet(BaseModel):
    """Rows ready for a writer, in grid order."""

    columns: list[str]
    rows: list[dict]
    comments: list[str] = []
