import os
from pathlib import Path

import ujson

from lognormal_laplace.models.tables import GoldenTable


class TablesConfig:
    def __init__(self) -> None:
        self._tables: dict[int, GoldenTable] = {}
        for path, _, files in os.walk(Path(__file__).parent.parent / 'tables'):
            for file in sorted(files):
                if file.endswith('.json'):
                    with open(Path(path, file)) as f:
                        table = GoldenTable.parse_obj(ujson.load(f))
                        self._tables[table.id] = table

    def __iter__(self):
        return iter(sorted(self._tables))

    def __getitem__(self, table_id: int) -> GoldenTable:
        return self._tables[table_id]

    def __contains__(self, table_id: int) -> bool:
        return table_id in self._tables

    def values(self):
        return [self._tables[i] for i in self]
