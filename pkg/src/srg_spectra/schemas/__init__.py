"""JSON schemas for the machine-readable CLI output."""

import json
from importlib import resources


def load_schema(name: str) -> dict:
    """``name`` is ``"scan_record"`` or ``"analyze"``."""
    return json.loads(resources.files(__name__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8"))
