import json
import os
from pathlib import Path

import pytest
from jsonschema import validate

SCHEMA_NAME = 'evaluator_config.schema.json'
APP_PATH = Path(__file__).parent.parent.parent
EVALUATORS_PATH = Path('evaluators')


@pytest.fixture()
def get_schema():
    with open(Path(APP_PATH, 'tests', EVALUATORS_PATH, SCHEMA_NAME)) as f:
        return json.load(f)


def test_validate_config_schema(get_schema):
    found = 0
    for path, subdirs, files in os.walk(APP_PATH / EVALUATORS_PATH):
        for file in files:
            if 'config.json' == file:
                with open(Path(path, file)) as f:
                    evaluator_config = json.load(f)
                    validate(evaluator_config, get_schema)
                    found += 1
    assert found == 5
