import json
import os
from pathlib import Path

import pytest
from jsonschema import validate

SCHEMA_NAME = 'table.schema.json'
APP_PATH = Path(__file__).parent.parent.parent
TABLES_PATH = Path('tables')


@pytest.fixture()
def get_schema():
    with open(Path(APP_PATH, 'tests', TABLES_PATH, SCHEMA_NAME)) as f:
        return json.load(f)


def test_validate_table_schema(get_schema):
    ids = []
    for path, subdirs, files in os.walk(APP_PATH / TABLES_PATH):
        for file in files:
            if file.endswith('.json'):
                with open(Path(path, file)) as f:
                    table = json.load(f)
                    validate(table, get_schema)
                    assert len(table['printed']) == len(table['z'])
                    assert all(len(row) == len(table['sigma']) for row in table['printed'])
                    ids.append(table['id'])
    assert sorted(ids) == [1, 2, 3, 4]


def test_tables_config_loads_every_table(tables):
    assert list(tables) == [1, 2, 3, 4]
    assert tables[1].cell(1, 1) == 0.38176
    assert tables[4].cell(10, 1) == 4.467548e-04
