"""JSON encoding of library results.

Numbers are emitted as ``{"exact": [r, s, d], "decimal": "..."}`` meaning
``r + s*sqrt(d)`` with ``r`` and ``s`` written as reduced fractions.  Every
top-level document carries ``schema_version``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any

import jsonschema

from .algebra.matrix import IntMatrix2
from .algebra.quad import Q, QuadNumber

SCHEMA_VERSION = "1.0"


def number(x) -> dict:
    q = Q(x)
    return {"exact": [str(q.a), str(q.b), q.d], "decimal": q.decimal(12)}


def read_number(obj: dict) -> QuadNumber:
    r, s, d = obj["exact"]
    return QuadNumber(Fraction(r), Fraction(s), int(d))


def point(p) -> list[dict]:
    return [number(c) for c in p]


def matrix(m) -> list[list]:
    rows = m.rows if isinstance(m, IntMatrix2) else m
    out = []
    for row in rows:
        out.append([v if isinstance(v, int) else number(v) for v in row])
    return out


def int_matrix(m) -> list[list[int]]:
    rows = m.rows if isinstance(m, IntMatrix2) else m
    return [[int(v) for v in row] for row in rows]


def document(command: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def error_document(command: str, exc: BaseException, code: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code},
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def load_schema(name: str) -> dict:
    text = resources.files("birfol").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


def validate(doc: dict, name: str | None = None) -> None:
    """Validate against the shipped schema (named after the command by default)."""
    if "error" in doc:
        name = "error"
    schema = load_schema(name or doc["command"])
    jsonschema.validate(doc, schema)
