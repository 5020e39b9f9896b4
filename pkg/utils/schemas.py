"""
JSON Schema helpers for input documents and reports.
"""
import json
from functools import lru_cache
from pathlib import Path
from typing import Dict

import jsonschema

from ferro2spin.errors import SpinSystemError

SCHEMA_DIR = Path(__file__).resolve().parent.parent / 'schemas'


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict:
    with open(SCHEMA_DIR / f"{name}.schema.json") as f:
        return json.load(f)


def validate_document(document, name: str):
    """Raise SpinSystemError naming the first schema violation."""
    try:
        jsonschema.validate(instance=document, schema=load_schema(name))
    except jsonschema.ValidationError as e:
        location = '/'.join(str(p) for p in e.absolute_path) or '<root>'
        raise SpinSystemError(f"{name} document invalid at {location}: {e.message}") from e


def validate_report(report, name: str):
    """Check a serialized report (after JSON round-trip) against schemas/<name>_report.schema.json."""
    jsonschema.validate(instance=report, schema=load_schema(f"{name}_report"))
