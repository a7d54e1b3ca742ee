import json
from pathlib import Path

import jsonschema
import pytest

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "schema.json").read_text())


def validate(instance, name):
    schema = {"$ref": f"#/$defs/{name}", **{k: v for k, v in SCHEMA.items() if k != "$id"}}
    jsonschema.Draft202012Validator(schema).validate(instance)


@pytest.fixture
def schema_validate():
    return validate
