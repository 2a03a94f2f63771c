"""
Canonical JSON output shared by the CLI and the golden files
"""
import json
from fractions import Fraction
from typing import Any

from pydantic import BaseModel


def _plain(obj: Any) -> Any:
    if isinstance(obj, BaseModel):
        return _plain(obj.model_dump(mode="json"))
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def canonical_json(obj: Any) -> str:
    """Sorted keys, two-space indent, trailing newline; byte-stable across runs"""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"
