import csv
import math
import sys
from typing import Optional, TextIO

import ujson

from lognormal_laplace.config import Config
from lognormal_laplace.models.records import OutputFormat, RecordSet, RunSpec, Subcommand
from lognormal_laplace.utils.errors import NonFiniteError
from lognormal_laplace.utils.logger import LogArgs, get_logger

logger = get_logger(__name__)

COMMENT_PREFIX = '# '


def digits_for(subcommand: Subcommand, config: Config) -> int:
    if subcommand is Subcommand.table:
        return config.TABLE_DIGITS
    return config.EVAL_DIGITS


def format_value(value, digits: int) -> str:
    """Fixed significant digits; None is an empty cell, text is kept."""
    if value is None:
        return ''
    if isinstance(value, str):
        return value
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteError('output', f'cannot emit {value}')
    return f'{value:.{digits}g}'


def _json_value(value, digits: int):
    text = format_value(value, digits)
    if value is None or isinstance(value, str):
        return value
    return float(text)


def write_csv(records: RecordSet, stream: TextIO, digits: int):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(records.columns)
    for row in records.rows:
        writer.writerow([format_value(row.get(column), digits) for column in records.columns])
    for comment in records.comments:
        stream.write(f'{COMMENT_PREFIX}{comment}\n')


def write_json(records: RecordSet, stream: TextIO, digits: int):
    document = {
        'columns': records.columns,
        'rows': [
            {column: _json_value(row.get(column), digits) for column in records.columns}
            for row in records.rows
        ],
        'comments': records.comments,
    }
    stream.write(ujson.dumps(document, ensure_ascii=False))
    stream.write('\n')


WRITERS = {
    OutputFormat.csv: write_csv,
    OutputFormat.json: write_json,
}


def write_records(records: RecordSet, spec: RunSpec, config: Config, stream: Optional[TextIO] = None):
    digits = digits_for(spec.subcommand, config)
    writer = WRITERS[spec.output_format]
    if spec.out is None:
        writer(records, stream or sys.stdout, digits)
    else:
        with open(spec.out, 'w', encoding='utf-8', newline='') as f:
            writer(records, f, digits)
    logger.info(
        'wrote %(records)s records as %(format)s',
        {LogArgs.records: len(records.rows), 'format': spec.output_format.value},
    )
